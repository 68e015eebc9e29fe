#include "hcd/exact_cover.hpp"

#include <stdexcept>

#include "hcd/errors.hpp"

namespace hcd {

ExactCover::ExactCover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows)
    : column_count_(columns), size_(columns + 1, 0), covered_(columns, false) {
  const std::size_t headers = columns + 1;
  std::size_t total = headers;
  for (const auto& r : rows) total += r.size();
  left_.resize(total);
  right_.resize(total);
  up_.resize(total);
  down_.resize(total);
  col_.resize(total);
  row_of_.resize(total);

  for (std::size_t h = 0; h < headers; ++h) {
    left_[h] = h == 0 ? columns : h - 1;
    right_[h] = h == columns ? 0 : h + 1;
    up_[h] = down_[h] = h;
    col_[h] = h;
  }

  std::size_t node = headers;
  row_nodes_.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw std::invalid_argument("exact cover row " + std::to_string(r) + " is empty");
    const std::size_t first = node;
    row_nodes_.push_back(first);
    for (std::uint32_t c : rows[r]) {
      if (c >= columns) throw std::out_of_range("exact cover column index out of range");
      const std::size_t h = c + 1;
      col_[node] = h;
      row_of_[node] = r;
      up_[node] = up_[h];
      down_[node] = h;
      down_[up_[h]] = node;
      up_[h] = node;
      ++size_[h];
      left_[node] = node == first ? node : node - 1;
      right_[node] = first;
      right_[node - (node == first ? 0 : 1)] = node;
      left_[first] = node;
      ++node;
    }
  }
}

void ExactCover::cover(std::size_t c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::size_t i = down_[c]; i != c; i = down_[i]) {
    for (std::size_t j = right_[i]; j != i; j = right_[j]) {
      up_[down_[j]] = up_[j];
      down_[up_[j]] = down_[j];
      --size_[col_[j]];
    }
  }
  covered_[c - 1] = true;
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = up_[c]; i != c; i = up_[i]) {
    for (std::size_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[col_[j]];
      up_[down_[j]] = j;
      down_[up_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
  covered_[c - 1] = false;
}

std::size_t ExactCover::pick_column() const {
  std::size_t best = right_[0];
  for (std::size_t c = right_[best]; c != 0; c = right_[c]) {
    if (size_[c] < size_[best]) best = c;
  }
  return best;
}

bool ExactCover::complete() const noexcept { return right_[0] == 0; }

bool ExactCover::select(std::size_t row) {
  const std::size_t first = row_nodes_.at(row);
  if (filter_ && !filter_(row, chosen_)) return false;
  std::size_t j = first;
  do {
    if (covered_[col_[j] - 1]) return false;
    j = right_[j];
  } while (j != first);
  j = first;
  do {
    cover(col_[j]);
    j = right_[j];
  } while (j != first);
  chosen_.push_back(row);
  return true;
}

std::vector<std::size_t> ExactCover::branch_rows() const {
  std::vector<std::size_t> out;
  if (complete()) return out;
  const std::size_t c = pick_column();
  for (std::size_t r = down_[c]; r != c; r = down_[r]) out.push_back(row_of_[r]);
  return out;
}

void ExactCover::tick() {
  if (deadline_ && (++ticks_ & 0x3ff) == 0 && Clock::now() > *deadline_) {
    throw GuardExceeded("exact cover search exceeded its time budget");
  }
}

bool ExactCover::search(const SolutionVisitor& visit) {
  tick();
  if (right_[0] == 0) return visit(chosen_);
  const std::size_t c = pick_column();
  if (size_[c] == 0) return true;
  cover(c);
  bool keep_going = true;
  for (std::size_t r = down_[c]; r != c && keep_going; r = down_[r]) {
    if (filter_ && !filter_(row_of_[r], chosen_)) continue;
    chosen_.push_back(row_of_[r]);
    for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
    keep_going = search(visit);
    for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
    chosen_.pop_back();
  }
  uncover(c);
  return keep_going;
}

bool ExactCover::solve(const SolutionVisitor& visit) { return search(visit); }

std::uint64_t ExactCover::count() {
  std::uint64_t n = 0;
  search([&n](std::span<const std::size_t>) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace hcd
