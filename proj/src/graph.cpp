#include "dcay/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

#include "dcay/connset.hpp"
#include "dcay/error.hpp"
#include "refine.hpp"

namespace dcay {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int order)
    : order_(order),
      words_((order + 63) / 64),
      bits_(static_cast<std::size_t>(order) * ((order + 63) / 64), 0) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
}

Graph Graph::layered(int n) {
  Graph g(2 * n);
  g.layer_modulus_ = n;
  return g;
}

Layer Graph::layer(int v) const {
  check_vertex(v);
  if (!is_layered()) throw Error(ErrorCode::InvalidArgument, "graph has no layer labels");
  return v < layer_modulus_ ? Layer::Rotation : Layer::Reflection;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw Error(ErrorCode::PointOutOfRange,
                "vertex " + std::to_string(v) + " outside [0, " + std::to_string(order_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u));
  row_data(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row_data(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  row_data(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_data(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const auto r = row(v);
  for (int k = 0; k < words_; ++k) {
    for (std::uint64_t w = r[k]; w != 0; w &= w - 1) out.push_back(k * 64 + std::countr_zero(w));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::optional<int> Graph::regular_degree() const {
  if (order_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < order_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(order_);
  h.layer_modulus_ = layer_modulus_;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (!has_edge(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) {
    throw Error(ErrorCode::DegreeMismatch, "relabelling has wrong length");
  }
  Graph h(order_);
  for (const auto& [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool Graph::operator==(const Graph& other) const {
  return order_ == other.order_ && bits_ == other.bits_;
}

bool Matching::is_matching() const {
  std::set<int> used;
  for (const auto& [u, v] : edges) {
    if (!used.insert(u).second || !used.insert(v).second) return false;
  }
  return true;
}

bool Matching::is_perfect(int order) const {
  return is_matching() && static_cast<int>(edges.size()) * 2 == order;
}

Graph cayley(const ConnectionSet& cs) {
  const int n = cs.n();
  Graph g = Graph::layered(n);
  for (int index = 0; index < 2 * n; ++index) {
    const auto vertex = DihedralElement::from_index(index, n);
    for (const auto& x : cs.elements()) g.add_edge(index, dh_mul(vertex, x).index());
  }
  return g;
}

Graph circulant(int n, std::span<const int> T) {
  std::set<int> set;
  for (int t : T) {
    const int r = mod(t, n);
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "0 in circulant connection set");
    set.insert(r);
  }
  for (int t : set) {
    if (!set.contains(mod(-t, n))) {
      throw Error(ErrorCode::AsymmetricSet, std::to_string(t) + " present but -" +
                                                std::to_string(t) + " missing mod " +
                                                std::to_string(n));
    }
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int t : set) g.add_edge(i, mod(i + t, n));
  }
  return g;
}

std::vector<int> symmetric_closure(int n, std::span<const int> reps) {
  std::set<int> set;
  for (int t : reps) {
    set.insert(mod(t, n));
    set.insert(mod(-t, n));
  }
  return {set.begin(), set.end()};
}

Graph union_disjoint(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph complete(int m) {
  Graph g(m);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph empty_graph(int m) { return Graph(m); }

Graph complete_bipartite(int m1, int m2) {
  Graph g(m1 + m2);
  for (int u = 0; u < m1; ++u) {
    for (int v = 0; v < m2; ++v) g.add_edge(u, m1 + v);
  }
  return g;
}

Graph cocktail_party(int parts) {
  Graph g = complete(2 * parts);
  for (int i = 0; i < parts; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

Graph crown(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "crown graph needs n >= 3");
  Graph g = complete_bipartite(n, n);
  for (int i = 0; i < n; ++i) g.remove_edge(i, n + i);
  return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.order(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          q.push(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Matching matching_of_reflection(int n, int a) {
  Matching m;
  for (int i = 0; i < n; ++i) m.edges.push_back(make_edge(i, n + mod(a - i, n)));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::pair<Matching, Matching> antipodal_matchings(int n) {
  if (n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "antipodal matchings need even n");
  Matching rot;
  Matching ref;
  for (int i = 0; i < n / 2; ++i) {
    rot.edges.push_back(make_edge(i, i + n / 2));
    ref.edges.push_back(make_edge(n + i, n + i + n / 2));
  }
  return {rot, ref};
}

std::string PartitionCheck::describe() const {
  if (ok) return "ok";
  std::string what;
  switch (problem) {
    case Problem::Duplicate: what = "edge listed twice"; break;
    case Problem::Missing: what = "graph edge missing from parts"; break;
    case Problem::Extra: what = "part edge not in graph"; break;
    case Problem::None: break;
  }
  if (edge) what += " {" + std::to_string(edge->first) + "," + std::to_string(edge->second) + "}";
  if (part >= 0) what += " in part " + std::to_string(part);
  return what;
}

PartitionCheck edge_partition_check(const Graph& g, std::span<const std::vector<Edge>> parts) {
  PartitionCheck result;
  std::set<Edge> covered;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& raw : parts[p]) {
      const Edge e = make_edge(raw.first, raw.second);
      const bool valid = e.first >= 0 && e.second < g.order() && e.first != e.second;
      if (!valid || !g.has_edge(e.first, e.second)) {
        return {false, PartitionCheck::Problem::Extra, e, static_cast<int>(p)};
      }
      if (!covered.insert(e).second) {
        return {false, PartitionCheck::Problem::Duplicate, e, static_cast<int>(p)};
      }
    }
  }
  for (const auto& e : g.edges()) {
    if (!covered.contains(e)) return {false, PartitionCheck::Problem::Missing, e, -1};
  }
  return result;
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const int> mapping) {
  if (g.order() != h.order() || static_cast<int>(mapping.size()) != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (int x : mapping) {
    if (x < 0 || x >= h.order() || hit[x]) return false;
    hit[x] = 1;
  }
  if (g.edge_count() != h.edge_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!h.has_edge(mapping[u], mapping[v])) return false;
  }
  return true;
}

std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h, int cap) {
  if (g.order() + h.order() > cap) {
    throw Error(ErrorCode::SizeCapExceeded, "combined order " +
                                                std::to_string(g.order() + h.order()) +
                                                " exceeds cap " + std::to_string(cap));
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};

  const auto path = detail::first_path(g, detail::Partition(g.order()));
  detail::Partition root(h.order());
  const std::uint64_t trace = root.refine_all(h);
  if (trace != path.front().trace) return std::nullopt;
  std::vector<int> mapping(g.order(), -1);
  std::uint64_t visited = 0;
  if (detail::find_equivalent_leaf(g, path, h, root, 0, mapping, visited)) return mapping;
  return std::nullopt;
}

std::optional<std::string> recognise(const Graph& g) {
  const int m = g.order();
  if (m == 0 || components(g).size() != 1) return std::nullopt;
  const auto degree = g.regular_degree();
  if (!degree) return std::nullopt;
  const int d = *degree;
  const auto sm = std::to_string(m);
  if (d == m - 1) return "K_" + sm;
  if (m >= 3 && d == 2) return "C_" + sm;
  if (m % 2 == 0) {
    const int half = m / 2;
    if (d == half && isomorphic(g, complete_bipartite(half, half), 2 * m)) {
      return "K_{" + std::to_string(half) + "," + std::to_string(half) + "}";
    }
    if (d == m - 2 && isomorphic(g, cocktail_party(half), 2 * m)) {
      std::string name = "K_{";
      for (int i = 0; i < half; ++i) name += i == 0 ? "2" : ",2";
      return name + "}";
    }
    if (half >= 3 && d == half - 1 && isomorphic(g, crown(half), 2 * m)) {
      return "Crown(" + std::to_string(half) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace dcay
