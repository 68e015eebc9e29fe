#include "hcd/permanent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "hcd/count_math.hpp"
#include "hcd/errors.hpp"
#include "hcd/parallel.hpp"

namespace hcd {

AdjacencyArray::AdjacencyArray(std::size_t k, std::size_t n,
                               const std::vector<std::vector<std::uint32_t>>& cells)
    : k_(k), n_(n) {
  if (k < 1) throw std::invalid_argument("array dimension k must be at least 1");
  std::vector<std::vector<std::uint32_t>> sorted = cells;
  for (const auto& c : sorted) {
    if (c.size() != k) throw std::invalid_argument("cell arity differs from k=" + std::to_string(k));
    for (std::uint32_t i : c) {
      if (i >= n) throw std::out_of_range("cell index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  flat_.reserve(sorted.size() * k);
  for (const auto& c : sorted) flat_.insert(flat_.end(), c.begin(), c.end());
}

AdjacencyArray AdjacencyArray::all_ones(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> cells;
  std::vector<std::uint32_t> c(k, 0);
  const std::uint64_t total = checked_pow(n, static_cast<unsigned>(k));
  cells.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t j = k; j > 0; --j) {
      c[j - 1] = static_cast<std::uint32_t>(x % n);
      x /= n;
    }
    cells.push_back(c);
  }
  return AdjacencyArray(k, n, cells);
}

bool AdjacencyArray::contains(std::span<const std::uint32_t> c) const {
  std::size_t lo = 0;
  std::size_t hi = cell_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto m = cell(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), c.begin(), c.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < cell_count() && std::equal(c.begin(), c.end(), cell(lo).begin());
}

std::vector<std::vector<std::uint32_t>> AdjacencyArray::cells() const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(cell_count());
  for (std::size_t i = 0; i < cell_count(); ++i) out.emplace_back(cell(i).begin(), cell(i).end());
  return out;
}

namespace {

// Cells grouped by first index; the rest of each cell is packed as k-1
// single-bit masks. Needs k >= 2 and 1 <= n <= 64.
class PermanentKernel {
 public:
  explicit PermanentKernel(const AdjacencyArray& m) : k_(m.k()), n_(m.n()), rows_(m.n()) {
    for (std::size_t i = 0; i < m.cell_count(); ++i) {
      const auto c = m.cell(i);
      auto& row = rows_[c[0]];
      for (std::size_t j = 1; j < k_; ++j) row.push_back(std::uint64_t{1} << c[j]);
    }
    // 2-D arrays: one column mask per row
    if (k_ == 2) {
      dense_.assign(n_, 0);
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::uint64_t bit : rows_[r]) dense_[r] |= bit;
      }
    }
  }

  std::size_t first_row_choices() const { return n_ == 0 ? 0 : rows_[0].size() / (k_ - 1); }

  // Completions after fixing choice `i` of row 0.
  std::uint64_t from_first_choice(std::size_t i) const {
    std::vector<std::uint64_t> used(k_ - 1, 0);
    const std::uint64_t* cell = rows_[0].data() + i * (k_ - 1);
    for (std::size_t j = 0; j + 1 < k_; ++j) used[j] = cell[j];
    if (k_ == 2) return dense(1, used[0]);
    return sparse(1, used);
  }

 private:
  std::uint64_t dense(std::size_t r, std::uint64_t used) const {
    if (r == n_) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t free = dense_[r] & ~used; free != 0; free &= free - 1) {
      total += dense(r + 1, used | (free & (~free + 1)));
    }
    return total;
  }

  std::uint64_t sparse(std::size_t r, std::vector<std::uint64_t>& used) const {
    if (r == n_) return 1;
    const std::size_t stride = k_ - 1;
    const auto& row = rows_[r];
    std::uint64_t total = 0;
    for (std::size_t off = 0; off < row.size(); off += stride) {
      bool ok = true;
      for (std::size_t j = 0; j < stride && ok; ++j) ok = (row[off + j] & used[j]) == 0;
      if (!ok) continue;
      for (std::size_t j = 0; j < stride; ++j) used[j] |= row[off + j];
      total += sparse(r + 1, used);
      for (std::size_t j = 0; j < stride; ++j) used[j] &= ~row[off + j];
    }
    return total;
  }

  std::size_t k_;
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> dense_;
};

}  // namespace

std::uint64_t permanent_k(const AdjacencyArray& m, const PermanentOptions& opts) {
  if (m.n() > std::min<std::size_t>(opts.max_n, 64)) {
    throw GuardExceeded("permanent of side " + std::to_string(m.n()) + " exceeds the limit of " +
                        std::to_string(std::min<std::size_t>(opts.max_n, 64)));
  }
  if (m.k() > opts.max_k) {
    throw GuardExceeded("permanent of dimension " + std::to_string(m.k()) + " exceeds the limit of " +
                        std::to_string(opts.max_k));
  }
  if (m.n() == 0) return 1;  // the empty diagonal
  if (m.k() == 1) return m.cell_count() == m.n() ? 1 : 0;

  const PermanentKernel kernel(m);
  const std::size_t choices = kernel.first_row_choices();
  std::vector<std::uint64_t> partial(choices, 0);
  parallel_for(std::max(1u, opts.workers), choices,
               [&](std::size_t i) { partial[i] = kernel.from_first_choice(i); });
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total = checked_add(total, p);
  return total;
}

bool PartiteHypergraph::has_collapsed_edges() const {
  return std::any_of(edge_witnesses.begin(), edge_witnesses.end(),
                     [](const auto& w) { return w.size() > 1; });
}

AdjacencyArray PartiteHypergraph::adjacency() const { return AdjacencyArray(k, n, edges); }

namespace {

template <typename Neighbours>
PartiteHypergraph build_hypergraph(const Partition& p, std::size_t witness_weight, Neighbours&& neighbours) {
  const PartitionReport report = validate_partition(p);
  if (!report.valid) throw std::invalid_argument("invalid partition: " + report.problems.front());

  PartiteHypergraph g;
  g.k = p.parts.size();
  g.n = p.parts.empty() ? 0 : p.parts.front().size();
  std::unordered_map<Codeword, std::pair<std::uint32_t, std::uint32_t>, CodewordHash> where;
  for (std::size_t part = 0; part < p.parts.size(); ++part) {
    g.vertex_labels.push_back(p.parts[part].words());
    for (std::size_t v = 0; v < p.parts[part].size(); ++v) {
      where.emplace(p.parts[part].words()[v], std::pair{static_cast<std::uint32_t>(part), static_cast<std::uint32_t>(v)});
    }
  }

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::map<std::vector<std::uint32_t>, std::vector<Codeword>> edges;
  for_each_face(p.params.n, p.params.q, witness_weight, [&](const Codeword& b) {
    std::vector<std::uint32_t> tuple(g.k, kUnset);
    for (const Codeword& a : neighbours(b)) {
      const auto [part, v] = where.at(a);
      if (tuple[part] != kUnset) {
        throw HypergraphError("face " + b.to_string() + " meets part " + std::to_string(part + 1) + " twice");
      }
      tuple[part] = v;
    }
    for (std::size_t part = 0; part < g.k; ++part) {
      if (tuple[part] == kUnset) {
        throw HypergraphError("face " + b.to_string() + " misses part " + std::to_string(part + 1));
      }
    }
    edges[tuple].push_back(b);
    return true;
  });
  for (auto& [tuple, witnesses] : edges) {
    g.edges.push_back(tuple);
    g.edge_witnesses.push_back(std::move(witnesses));
  }
  return g;
}

std::uint64_t count_via(const PartiteHypergraph& g, const PermanentOptions& opts) {
  if (g.has_collapsed_edges()) {
    throw HypergraphError("distinct witness faces induce the same edge; the 0/1 array would undercount");
  }
  return permanent_k(g.adjacency(), opts);
}

}  // namespace

PartiteHypergraph build_gh(const Partition& p) {
  if (p.params.kind != Kind::H) throw std::invalid_argument("GH needs a partition into H designs");
  const std::size_t w = p.params.w;
  return build_hypergraph(p, p.params.t, [w](const Codeword& b) { return subfaces(b, w); });
}

PartiteHypergraph build_ga(const Partition& p) {
  if (p.params.kind != Kind::A) throw std::invalid_argument("GA needs a partition into A designs");
  const std::size_t t = p.params.t;
  return build_hypergraph(p, p.params.w, [t](const Codeword& a) { return superfaces(a, t); });
}

std::uint64_t count_a_designs_via_permanent(const Partition& h_partition, const PermanentOptions& opts) {
  return count_via(build_gh(h_partition), opts);
}

std::uint64_t count_h_designs_via_permanent(const Partition& a_partition, const PermanentOptions& opts) {
  return count_via(build_ga(a_partition), opts);
}

}  // namespace hcd
