#pragma once

// Undirected simple graphs with bit-row adjacency, plus the Cayley, circulant
// and reference constructions used throughout the library.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcay {

class ConnectionSet;

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<int, int>;
Edge make_edge(int u, int v);

enum class Layer { Rotation, Reflection };

class Graph {
 public:
  explicit Graph(int order = 0);
  /// 2n vertices; r^i is vertex i and s r^i is vertex n + i.
  static Graph layered(int n);

  int order() const noexcept { return order_; }
  bool is_layered() const noexcept { return layer_modulus_ > 0; }
  /// n for a layered graph, 0 otherwise.
  int layer_modulus() const noexcept { return layer_modulus_; }
  Layer layer(int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const noexcept {
    return (row_data(u)[v >> 6] >> (v & 63)) & 1U;
  }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  /// Degree of every vertex if regular.
  std::optional<int> regular_degree() const;

  int words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(int v) const {
    return {row_data(v), static_cast<std::size_t>(words_)};
  }

  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;
  /// Image under the vertex map v -> perm[v].
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const;

 private:
  const std::uint64_t* row_data(int v) const noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  std::uint64_t* row_data(int v) noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void check_vertex(int v) const;

  int order_ = 0;
  int words_ = 0;
  int layer_modulus_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Matching {
  std::vector<Edge> edges;  // sorted

  /// No two edges share a vertex.
  bool is_matching() const;
  bool is_perfect(int order) const;
};

// ---- constructions ----

/// g ~ g x for every x in S (right multiplication).
Graph cayley(const ConnectionSet& cs);
/// i ~ j iff (j - i) mod n in T. T must be symmetric and avoid 0.
Graph circulant(int n, std::span<const int> T);
Graph union_disjoint(const Graph& g, const Graph& h);
Graph complete(int m);
Graph cycle(int m);
Graph empty_graph(int m);
Graph complete_bipartite(int m1, int m2);
/// K_{2,...,2} with `parts` parts (the octahedron for 3).
Graph cocktail_party(int parts);
/// K_{n,n} minus {x_i y_i}; x_i = i, y_i = n + i.
Graph crown(int n);
/// Symmetric closure of {+-t}; the natural way to write Circ(n; {1,3}).
std::vector<int> symmetric_closure(int n, std::span<const int> reps);

// ---- structure ----

/// Sorted components, listed by least vertex.
std::vector<std::vector<int>> components(const Graph& g);
/// 0/1 colouring by BFS from the least vertex of each component (coloured 0).
std::optional<std::vector<int>> is_bipartite(const Graph& g);

/// {r^i, s r^{a-i}} for i in Z_n, as layered vertex indices.
Matching matching_of_reflection(int n, int a);
/// N_R = {r^i, r^{i+n/2}}, N_F = {s r^i, s r^{i+n/2}}. n must be even.
std::pair<Matching, Matching> antipodal_matchings(int n);

struct PartitionCheck {
  enum class Problem { None, Duplicate, Missing, Extra };
  bool ok = true;
  Problem problem = Problem::None;
  std::optional<Edge> edge;  // certificate
  int part = -1;             // part containing the offending edge, if any
  std::string describe() const;
};

/// True iff the parts are pairwise disjoint and their union is exactly E(g).
PartitionCheck edge_partition_check(const Graph& g, std::span<const std::vector<Edge>> parts);

/// Adjacency-preserving bijection g -> h (mapping[v] in h), or nullopt.
/// Throws SizeCapExceeded when order(g) + order(h) > cap.
std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h, int cap = 128);
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const int> mapping);

/// Name of a recognised standard graph (K_m, K_{m,m}, K_{2,2,2}, C_m, Crown(m)),
/// otherwise nullopt. Only connected graphs are recognised.
std::optional<std::string> recognise(const Graph& g);

}  // namespace dcay
