#pragma once

// Multidimensional permanents of 0/1 arrays and the partite hypergraphs GH
// and GA whose perfect matchings are A designs and H designs respectively.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hcd/face.hpp"
#include "hcd/search.hpp"

namespace hcd {

// Sparse k-dimensional N x ... x N 0/1 array. Cells are 0-based, stored
// flat (k indices per cell), sorted lexicographically and unique.
class AdjacencyArray {
 public:
  // Sorts and deduplicates `cells`; throws std::out_of_range on a bad index
  // and std::invalid_argument on a cell of the wrong arity.
  AdjacencyArray(std::size_t k, std::size_t n, const std::vector<std::vector<std::uint32_t>>& cells);

  static AdjacencyArray all_ones(std::size_t k, std::size_t n);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const std::uint32_t> cell(std::size_t i) const { return {flat_.data() + i * k_, k_}; }
  bool contains(std::span<const std::uint32_t> cell) const;

  std::vector<std::vector<std::uint32_t>> cells() const;

  friend bool operator==(const AdjacencyArray&, const AdjacencyArray&) = default;

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<std::uint32_t> flat_;
};

struct PermanentOptions {
  unsigned workers = 1;
  std::size_t max_n = 64;  // hard ceiling: used-index sets are 64-bit masks
  std::size_t max_k = 16;
};

// Sum over all diagonals of the product of cells, i.e. the number of perfect
// k-matchings. Depth-first over first-axis indices with one used-index mask
// per remaining axis. Throws GuardExceeded past the configured size.
std::uint64_t permanent_k(const AdjacencyArray& m, const PermanentOptions& opts = {});

struct PartiteHypergraph {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> edges;  // 0-based vertex per part, sorted
  std::vector<std::vector<Codeword>> vertex_labels;   // [part][vertex]
  std::vector<std::vector<Codeword>> edge_witnesses;  // faces inducing each edge

  // Some part tuple was induced by more than one witness face; the 0/1
  // adjacency array would undercount.
  bool has_collapsed_edges() const;
  AdjacencyArray adjacency() const;
};

// GH: parts are the H designs of a partition of Q_q^n(w); one edge per
// weight-t face, made of its weight-w subfaces. Throws std::invalid_argument
// for an invalid partition, HypergraphError if a face misses a part.
PartiteHypergraph build_gh(const Partition& p);

// GA: parts are the A designs of a partition of Q_q^n(t); one edge per
// weight-w face, made of its weight-t superfaces.
PartiteHypergraph build_ga(const Partition& p);

// Number of A(n,q,w,t) designs as per_k of GH.
std::uint64_t count_a_designs_via_permanent(const Partition& h_partition,
                                            const PermanentOptions& opts = {});
// Number of H(n,q,w,t) designs as per_m of GA.
std::uint64_t count_h_designs_via_permanent(const Partition& a_partition,
                                            const PermanentOptions& opts = {});

}  // namespace hcd
