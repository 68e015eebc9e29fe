#pragma once

// Dancing-links exact cover (Knuth's Algorithm X) over primary columns only.
// Column choice is most-constrained first, ties broken by lowest column
// index, so the exploration order is fully deterministic.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hcd {

class ExactCover {
 public:
  using Clock = std::chrono::steady_clock;
  // Vetoes adding `row` to the partial solution `chosen`.
  using RowFilter = std::function<bool(std::size_t row, std::span<const std::size_t> chosen)>;
  // Return false to stop the enumeration.
  using SolutionVisitor = std::function<bool(std::span<const std::size_t> rows)>;

  // rows[r] lists the columns covered by row r; every row must be non-empty
  // and every column index below `columns`.
  ExactCover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t column_count() const noexcept { return column_count_; }
  std::size_t row_count() const noexcept { return row_nodes_.size(); }

  // Fixes a row into every solution. Returns false if the filter rejects it
  // or it clashes with an earlier selection (the instance is then unchanged).
  bool select(std::size_t row);
  std::span<const std::size_t> selected() const noexcept { return chosen_; }

  // True once every column is covered.
  bool complete() const noexcept;

  // Rows of the column the search would branch on first; empty when complete
  // or when some column has no rows left.
  std::vector<std::size_t> branch_rows() const;

  void set_filter(RowFilter filter) { filter_ = std::move(filter); }
  // The search throws GuardExceeded once the deadline passes.
  void set_deadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }

  // Visits every solution (selected rows, in selection order). Returns false
  // if the visitor stopped the search.
  bool solve(const SolutionVisitor& visit);
  std::uint64_t count();

 private:
  bool search(const SolutionVisitor& visit);
  void cover(std::size_t col);
  void uncover(std::size_t col);
  std::size_t pick_column() const;
  void tick();

  std::size_t column_count_;
  // node arrays; node 0 is the root, nodes 1..columns are column headers
  std::vector<std::size_t> left_, right_, up_, down_, col_, row_of_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> row_nodes_;  // first node of each row
  std::vector<bool> covered_;
  std::vector<std::size_t> chosen_;
  RowFilter filter_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
};

}  // namespace hcd
