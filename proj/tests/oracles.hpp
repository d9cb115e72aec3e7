#pragma once

// Slow, obviously-correct reference computations. Nothing here shares code
// with the library beyond the Graph and Permutation containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "dcay/graph.hpp"
#include "dcay/perm_group.hpp"

namespace dcay::oracle {

/// Counts automorphisms by extending a partial map one vertex at a time and
/// checking every already-mapped pair. Only meant for graphs of order <= 10.
inline std::uint64_t count_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != g.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      extend(v + 1);
      used[w] = 0;
    }
  };
  extend(0);
  return count;
}

/// Every permutation of the vertex set that preserves adjacency, for tiny graphs.
inline bool isomorphic_brute(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const int n = g.order();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != h.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

/// Size of the closure of `gens` under composition, or 0 once it exceeds `limit`.
inline std::uint64_t closure_order(const std::vector<Permutation>& gens, int degree,
                                   std::size_t limit = 5000) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > limit) return 0;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Permutation random_permutation(int degree, std::mt19937& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

/// A random product of a few short cycles; keeps generated groups small more often
/// than uniform permutations do.
inline Permutation random_sparse_permutation(int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(2, std::min(degree, 4));
  std::vector<int> pts(degree);
  for (int i = 0; i < degree; ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  const int l = len(rng);
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (int i = 0; i < l; ++i) images[pts[i]] = pts[(i + 1) % l];
  return Permutation(std::move(images));
}

/// Erdos-Renyi graph with a fixed seed.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace dcay::oracle
