#include "refine.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <utility>

namespace dcay::detail {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running hash
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Partition::Partition(int order)
    : elems_(order), cell_of_(order, 0), len_(order, 0), cells_(order > 0 ? 1 : 0) {
  std::iota(elems_.begin(), elems_.end(), 0);
  if (order > 0) len_[0] = order;
}

Partition::Partition(std::span<const int> colors)
    : elems_(colors.size()), cell_of_(colors.size(), 0), len_(colors.size(), 0), cells_(0) {
  std::vector<std::pair<int, int>> keyed;
  for (std::size_t v = 0; v < colors.size(); ++v) keyed.emplace_back(colors[v], static_cast<int>(v));
  std::sort(keyed.begin(), keyed.end());
  int start = 0;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    elems_[i] = keyed[i].second;
    if (i > 0 && keyed[i].first != keyed[i - 1].first) {
      len_[start] = static_cast<int>(i) - start;
      start = static_cast<int>(i);
      ++cells_;
    }
    cell_of_[keyed[i].second] = start;
  }
  if (!keyed.empty()) {
    len_[start] = static_cast<int>(keyed.size()) - start;
    ++cells_;
  }
}

int Partition::target_cell() const {
  int best = -1;
  for (int s = 0; s < order(); s += len_[s]) {
    if (len_[s] > 1 && (best < 0 || len_[s] < len_[best])) best = s;
  }
  return best;
}

std::vector<int> Partition::cell(int start) const {
  std::vector<int> out(elems_.begin() + start, elems_.begin() + start + len_[start]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Partition::split(int start, const std::vector<int>& key_of_position) {
  const int length = len_[start];
  std::vector<std::pair<int, int>> keyed(length);
  for (int i = 0; i < length; ++i) keyed[i] = {key_of_position[i], elems_[start + i]};
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> starts;
  for (int i = 0; i < length; ++i) {
    elems_[start + i] = keyed[i].second;
    if (i == 0 || keyed[i].first != keyed[i - 1].first) starts.push_back(start + i);
  }
  for (std::size_t p = 0; p < starts.size(); ++p) {
    const int s = starts[p];
    const int e = p + 1 < starts.size() ? starts[p + 1] : start + length;
    len_[s] = e - s;
    for (int i = s; i < e; ++i) cell_of_[elems_[i]] = s;
  }
  cells_ += static_cast<int>(starts.size()) - 1;
  return starts;
}

std::uint64_t Partition::refine(const Graph& g, std::vector<int> initial) {
  const int n = order();
  std::uint64_t hash = 0x2545f4914f6cdd1dULL;
  std::vector<char> queued(n, 0);
  std::deque<int> queue;
  for (int s : initial) {
    if (!queued[s]) {
      queued[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<std::uint64_t> mask(g.words_per_row());
  std::vector<int> key;
  while (!queue.empty() && !discrete()) {
    const int w = queue.front();
    queue.pop_front();
    queued[w] = 0;
    std::fill(mask.begin(), mask.end(), 0);
    for (int i = w; i < w + len_[w]; ++i) mask[elems_[i] >> 6] |= std::uint64_t{1} << (elems_[i] & 63);
    hash = mix(hash, (static_cast<std::uint64_t>(w) << 32) | static_cast<std::uint32_t>(len_[w]));

    for (int s = 0; s < n;) {
      const int length = len_[s];
      const int next = s + length;
      if (length > 1) {
        key.assign(length, 0);
        bool uniform = true;
        for (int i = 0; i < length; ++i) {
          const auto row = g.row(elems_[s + i]);
          int count = 0;
          for (std::size_t k = 0; k < mask.size(); ++k) count += std::popcount(row[k] & mask[k]);
          key[i] = count;
          if (count != key[0]) uniform = false;
        }
        if (!uniform) {
          const auto pieces = split(s, key);
          for (int p : pieces) {
            hash = mix(hash, (static_cast<std::uint64_t>(p) << 32) |
                                 static_cast<std::uint32_t>(len_[p]));
            if (!queued[p]) {
              queued[p] = 1;
              queue.push_back(p);
            }
          }
          // key is indexed by pre-split positions; only its sorted form is label-free
          std::sort(key.begin(), key.end());
          for (int c : key) hash = mix(hash, static_cast<std::uint64_t>(c));
        }
      }
      s = next;
    }
  }
  hash = mix(hash, static_cast<std::uint64_t>(cells_));
  return hash;
}

std::uint64_t Partition::refine_all(const Graph& g) {
  std::vector<int> starts;
  for (int s = 0; s < order(); s += len_[s]) starts.push_back(s);
  return refine(g, std::move(starts));
}

std::uint64_t Partition::individualize_and_refine(const Graph& g, int v) {
  const int s = cell_of_[v];
  const int length = len_[s];
  if (length == 1) return refine(g, {s});
  auto first = elems_.begin() + s;
  auto it = std::find(first, first + length, v);
  std::rotate(first, it, it + 1);
  std::sort(first + 1, first + length);
  len_[s] = 1;
  len_[s + 1] = length - 1;
  for (int i = s + 1; i < s + length; ++i) cell_of_[elems_[i]] = s + 1;
  ++cells_;
  return mix(refine(g, {s}), (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint32_t>(length));
}

std::vector<PathNode> first_path(const Graph& g, Partition root) {
  std::vector<PathNode> path;
  const std::uint64_t trace = root.refine_all(g);
  path.push_back({std::move(root), trace});
  while (!path.back().partition.discrete()) {
    Partition next = path.back().partition;
    const int v = next.cell(next.target_cell()).front();
    const std::uint64_t t = next.individualize_and_refine(g, v);
    path.back().individualized = v;
    path.push_back({std::move(next), t});
  }
  return path;
}

bool find_equivalent_leaf(const Graph& g, const std::vector<PathNode>& path, const Graph& h,
                          const Partition& node, std::size_t depth, std::vector<int>& mapping,
                          std::uint64_t& nodes_visited) {
  ++nodes_visited;
  if (node.discrete()) {
    const auto& from = path.back().partition.elements();
    const auto& to = node.elements();
    for (std::size_t i = 0; i < from.size(); ++i) mapping[from[i]] = to[i];
    return is_isomorphism(g, h, mapping);
  }
  if (depth + 1 >= path.size()) return false;
  for (int w : node.cell(node.target_cell())) {
    Partition child = node;
    const std::uint64_t trace = child.individualize_and_refine(h, w);
    const auto& expected = path[depth + 1];
    if (trace != expected.trace || child.cell_count() != expected.partition.cell_count()) continue;
    if (find_equivalent_leaf(g, path, h, child, depth + 1, mapping, nodes_visited)) return true;
  }
  return false;
}

}  // namespace dcay::detail
