#pragma once

// Ordered-partition refinement shared by the isomorphism test and the
// automorphism search. Every step depends only on cell positions and
// neighbour counts, never on vertex labels, so isomorphic inputs produce
// matching partitions and matching traces.

#include <cstdint>
#include <span>
#include <vector>

#include "dcay/graph.hpp"

namespace dcay::detail {

class Partition {
 public:
  /// Single cell holding every vertex.
  explicit Partition(int order);
  /// One cell per colour value, cells ordered by ascending colour.
  explicit Partition(std::span<const int> colors);

  int order() const noexcept { return static_cast<int>(elems_.size()); }
  int cell_count() const noexcept { return cells_; }
  bool discrete() const noexcept { return cells_ == order(); }

  /// Vertices in partition order; a discrete partition is a labelling.
  const std::vector<int>& elements() const noexcept { return elems_; }
  int cell_length(int start) const { return len_[start]; }
  int cell_of(int v) const { return cell_of_[v]; }

  /// Smallest non-singleton cell, lowest start on ties; -1 when discrete.
  int target_cell() const;
  /// Vertices of the cell starting at `start`, ascending.
  std::vector<int> cell(int start) const;

  /// Moves v to the front of its cell as a singleton and refines.
  /// Returns the refinement trace hash.
  std::uint64_t individualize_and_refine(const Graph& g, int v);
  /// Equitable refinement starting from every cell; returns the trace hash.
  std::uint64_t refine_all(const Graph& g);

 private:
  std::uint64_t refine(const Graph& g, std::vector<int> queue);
  // Splits the cell at `start` by key; returns the starts of the resulting pieces.
  std::vector<int> split(int start, const std::vector<int>& key_of_position);

  std::vector<int> elems_;
  std::vector<int> cell_of_;  // vertex -> start of its cell
  std::vector<int> len_;      // start -> cell length (valid at starts only)
  int cells_ = 0;
};

struct PathNode {
  Partition partition;
  std::uint64_t trace;
  int individualized = -1;  // vertex individualised to reach the next node
};

/// Leftmost root-to-leaf path: always individualise the lowest vertex of the
/// target cell. The last node is discrete.
std::vector<PathNode> first_path(const Graph& g, Partition root);

/// Depth-first search below `node` (which sits at `depth` on a path
/// compatible with `path`) for a leaf whose labelling, matched against the
/// leaf of `path`, is an isomorphism g -> h. Nodes whose trace differs from
/// the path are pruned. On success `mapping` holds the bijection.
bool find_equivalent_leaf(const Graph& g, const std::vector<PathNode>& path, const Graph& h,
                          const Partition& node, std::size_t depth, std::vector<int>& mapping,
                          std::uint64_t& nodes_visited);

}  // namespace dcay::detail
