#pragma once

// Designs as exact covers: every witness face must be hit by exactly one
// chosen candidate face. Search, exhaustive counting and partitioning of a
// whole face layer into designs.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcd/design.hpp"

namespace hcd {

inline constexpr std::uint64_t kDefaultIncidenceLimit = 1'000'000;

// Default incidence cap; HD_GUARD_LIMIT overrides it when set to a positive
// integer.
std::uint64_t default_incidence_limit();

struct Guard {
  std::uint64_t incidence_limit = default_incidence_limit();
  std::chrono::milliseconds time_budget{0};  // 0 = unbounded
};

struct ExactCoverInstance {
  DesignParams params;
  std::vector<Codeword> constraints;  // witness faces, canonical order
  std::vector<Codeword> candidates;   // possible design words, canonical order
  std::vector<std::vector<std::uint32_t>> incidence;  // candidate -> constraint indices

  std::size_t constraint_index(const Codeword& c) const;  // throws if absent
  std::size_t candidate_index(const Codeword& c) const;   // throws if absent
};

// Throws GuardExceeded when |candidates| * incidence size exceeds the cap.
ExactCoverInstance build_instance(const DesignParams& params, const Guard& guard = {});

struct SearchOptions {
  std::size_t max_solutions = 0;  // 0 = all
  std::size_t min_distance = 0;   // pairwise starred distance bound, 0 = off
  std::vector<Codeword> forbidden;
  std::vector<Codeword> required;
  // H designs only: relabel so the first witness is hit by an all-zero word.
  // Preserves existence, not counts.
  bool symmetry_breaking = false;
  Guard guard;
  unsigned workers = 1;
  // Shuffles the order of top-level branches. Full enumerations are still
  // returned in canonical order.
  std::optional<std::uint64_t> branch_seed;
};

// Designs in canonical order (lexicographic over sorted word lists). An empty
// result means the search space was exhausted.
std::vector<Design> search_design(const DesignParams& params, const SearchOptions& opts = {});

struct CountOptions {
  Guard guard;
  unsigned workers = 1;
};

// Exact number of distinct (label-distinct) designs.
std::uint64_t count_designs(const DesignParams& params, const CountOptions& opts = {});

struct Partition {
  DesignParams params;  // kind and parameters of every part
  std::vector<Design> parts;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Number of designs in a partition of the whole candidate layer:
// C(n-t,n-w) q^(w-t) for H parts, C(w,t) for A parts.
std::uint64_t partition_part_count(const DesignParams& params);

struct PartitionReport {
  bool valid = true;
  std::vector<std::string> problems;
};

PartitionReport validate_partition(const Partition& p);

struct PartitionOptions {
  Guard guard;
};

// First partition found by layered exact cover, each layer seeded with the
// smallest unused face. nullopt means none exists (search exhausted).
std::optional<Partition> partition_into_designs(const DesignParams& params,
                                                const PartitionOptions& opts = {});

}  // namespace hcd
