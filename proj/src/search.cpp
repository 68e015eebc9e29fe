#include "hcd/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "hcd/count_math.hpp"
#include "hcd/errors.hpp"
#include "hcd/exact_cover.hpp"
#include "hcd/parallel.hpp"

namespace hcd {

std::uint64_t default_incidence_limit() {
  if (const char* env = std::getenv("HD_GUARD_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultIncidenceLimit;
}

namespace {

std::size_t index_in(const std::vector<Codeword>& sorted, const Codeword& c, const char* what) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || *it != c) {
    throw std::invalid_argument(c.to_string() + " is not a " + what + " of this instance");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

std::optional<ExactCover::Clock::time_point> deadline_for(const Guard& g) {
  if (g.time_budget.count() <= 0) return std::nullopt;
  return ExactCover::Clock::now() + g.time_budget;
}

using Solution = std::vector<std::size_t>;

// Enumerates up to `max` solutions (0 = all) by splitting on the first branch
// column. The result equals a sequential run for every worker count.
std::vector<Solution> enumerate(const ExactCover& base, std::size_t max, unsigned workers,
                                const std::optional<std::uint64_t>& seed) {
  if (base.complete()) {
    return {Solution(base.selected().begin(), base.selected().end())};
  }
  std::vector<std::size_t> branches = base.branch_rows();
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(branches.begin(), branches.end(), rng);
  }

  auto run_branch = [&](std::size_t i, std::size_t cap, std::vector<Solution>& out) {
    ExactCover ec = base;
    if (!ec.select(branches[i])) return;
    ec.solve([&](std::span<const std::size_t> rows) {
      out.emplace_back(rows.begin(), rows.end());
      return cap == 0 || out.size() < cap;
    });
  };

  std::vector<Solution> result;
  if (workers <= 1) {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (max != 0 && result.size() >= max) break;
      std::vector<Solution> part;
      run_branch(i, max == 0 ? 0 : max - result.size(), part);
      for (auto& s : part) result.push_back(std::move(s));
    }
    return result;
  }

  std::vector<std::vector<Solution>> parts(branches.size());
  parallel_for(workers, branches.size(), [&](std::size_t i) { run_branch(i, max, parts[i]); });
  for (auto& part : parts) {
    for (auto& s : part) {
      if (max != 0 && result.size() >= max) break;
      result.push_back(std::move(s));
    }
  }
  return result;
}

std::uint64_t count_all(const ExactCover& base, unsigned workers) {
  if (base.complete()) return 1;
  const std::vector<std::size_t> branches = base.branch_rows();
  std::vector<std::uint64_t> counts(branches.size(), 0);
  parallel_for(std::max(1u, workers), branches.size(), [&](std::size_t i) {
    ExactCover ec = base;
    if (ec.select(branches[i])) counts[i] = ec.count();
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total = checked_add(total, c);
  return total;
}

std::uint64_t incidence_per_candidate(const DesignParams& p) {
  const auto n = static_cast<unsigned>(p.n);
  const auto w = static_cast<unsigned>(p.w);
  const auto t = static_cast<unsigned>(p.t);
  if (p.kind == Kind::H) return binomial(w, t);
  return checked_mul(binomial(n - t, w - t), checked_pow(p.q, w - t));
}

}  // namespace

std::size_t ExactCoverInstance::constraint_index(const Codeword& c) const {
  return index_in(constraints, c, "witness face");
}

std::size_t ExactCoverInstance::candidate_index(const Codeword& c) const {
  return index_in(candidates, c, "candidate face");
}

ExactCoverInstance build_instance(const DesignParams& params, const Guard& guard) {
  params.validate(ParamPolicy::kAllowZeroT);
  const std::uint64_t incidences =
      checked_mul(face_count(params.n, params.q, params.word_weight()), incidence_per_candidate(params));
  if (incidences > guard.incidence_limit) {
    throw GuardExceeded(params.to_string() + " needs " + std::to_string(incidences) +
                        " candidate-witness incidences, above the limit of " +
                        std::to_string(guard.incidence_limit));
  }

  ExactCoverInstance inst;
  inst.params = params;
  inst.constraints = enumerate_faces(params.n, params.q, params.witness_weight());
  inst.candidates = enumerate_faces(params.n, params.q, params.word_weight());
  inst.incidence.reserve(inst.candidates.size());
  for (const Codeword& c : inst.candidates) {
    const auto faces = params.kind == Kind::H ? superfaces(c, params.t) : subfaces(c, params.w);
    std::vector<std::uint32_t> row;
    row.reserve(faces.size());
    for (const Codeword& f : faces) row.push_back(static_cast<std::uint32_t>(inst.constraint_index(f)));
    inst.incidence.push_back(std::move(row));
  }
  return inst;
}

std::vector<Design> search_design(const DesignParams& params, const SearchOptions& opts) {
  if (opts.symmetry_breaking && (!opts.required.empty() || !opts.forbidden.empty())) {
    throw std::invalid_argument("symmetry breaking cannot be combined with required or forbidden words");
  }
  const ExactCoverInstance inst = build_instance(params, opts.guard);

  std::vector<bool> rejected(inst.candidates.size(), false);
  for (const Codeword& c : opts.forbidden) rejected[inst.candidate_index(c)] = true;
  if (opts.symmetry_breaking && params.kind == Kind::H && !inst.constraints.empty()) {
    // Per-coordinate symbol permutations act on designs; any design can be
    // moved so the word under the first witness carries only zeros.
    const Codeword& first = inst.constraints.front();
    for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
      const Codeword& c = inst.candidates[i];
      if (!covers(first, c)) continue;
      const auto codes = c.codes();
      rejected[i] = std::any_of(codes.begin(), codes.end(),
                                [](std::uint32_t x) { return x != kStarCode && x != 0; });
    }
  }

  ExactCover ec(inst.constraints.size(), inst.incidence);
  ec.set_deadline(deadline_for(opts.guard));
  const std::size_t min_dist = opts.min_distance;
  ec.set_filter([&inst, &rejected, min_dist](std::size_t row, std::span<const std::size_t> chosen) {
    if (rejected[row]) return false;
    if (min_dist == 0) return true;
    for (std::size_t other : chosen) {
      if (hamming_distance(inst.candidates[row], inst.candidates[other]) < min_dist) return false;
    }
    return true;
  });
  for (const Codeword& c : opts.required) {
    if (!ec.select(inst.candidate_index(c))) return {};
  }

  const std::vector<Solution> found = enumerate(ec, opts.max_solutions, opts.workers, opts.branch_seed);
  std::vector<Design> designs;
  designs.reserve(found.size());
  for (const Solution& rows : found) {
    std::vector<Codeword> words;
    words.reserve(rows.size());
    for (std::size_t r : rows) words.push_back(inst.candidates[r]);
    designs.emplace_back(params, std::move(words), ParamPolicy::kAllowZeroT);
  }
  std::sort(designs.begin(), designs.end(),
            [](const Design& a, const Design& b) { return a.words() < b.words(); });
  return designs;
}

std::uint64_t count_designs(const DesignParams& params, const CountOptions& opts) {
  const ExactCoverInstance inst = build_instance(params, opts.guard);
  ExactCover ec(inst.constraints.size(), inst.incidence);
  ec.set_deadline(deadline_for(opts.guard));
  return count_all(ec, opts.workers);
}

std::uint64_t partition_part_count(const DesignParams& p) {
  const auto n = static_cast<unsigned>(p.n);
  const auto w = static_cast<unsigned>(p.w);
  const auto t = static_cast<unsigned>(p.t);
  if (p.kind == Kind::H) return checked_mul(binomial(n - t, n - w), checked_pow(p.q, w - t));
  return binomial(w, t);
}

PartitionReport validate_partition(const Partition& part) {
  PartitionReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  const DesignParams& p = part.params;
  const std::uint64_t expected_parts = partition_part_count(p);
  if (part.parts.size() != expected_parts) {
    fail("has " + std::to_string(part.parts.size()) + " parts, expected " + std::to_string(expected_parts));
  }

  std::vector<Codeword> all;
  for (std::size_t i = 0; i < part.parts.size(); ++i) {
    const Design& d = part.parts[i];
    const std::string label = "part " + std::to_string(i + 1);
    if (d.params() != p) {
      fail(label + " has parameters " + d.params().to_string() + ", expected " + p.to_string());
      continue;
    }
    if (d.size() != part.parts.front().size()) fail(label + " differs in size from part 1");
    const VerificationReport vr = verify(d);
    if (!vr.valid) {
      fail(label + " is not a design: face " + vr.violations.front().witness.to_string() + " has count " +
           std::to_string(vr.violations.front().count));
    }
    all.insert(all.end(), d.words().begin(), d.words().end());
  }
  std::sort(all.begin(), all.end());
  if (const auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    fail("word " + dup->to_string() + " appears in more than one part");
  }
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all != enumerate_faces(p.n, p.q, p.word_weight())) {
    fail("parts do not cover every weight-" + std::to_string(p.word_weight()) + " face exactly");
  }
  return report;
}

std::optional<Partition> partition_into_designs(const DesignParams& params, const PartitionOptions& opts) {
  const Cardinality size = expected_cardinality(params);
  if (!size.integral() || size.numerator == 0) return std::nullopt;

  const ExactCoverInstance inst = build_instance(params, opts.guard);
  const auto deadline = deadline_for(opts.guard);
  std::vector<bool> used(inst.candidates.size(), false);
  std::vector<std::vector<std::size_t>> layers;

  // Returns true once the remaining faces are fully split into designs.
  std::function<bool()> fill = [&]() -> bool {
    const auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;

    std::vector<std::size_t> global;
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i]) continue;
      global.push_back(i);
      rows.push_back(inst.incidence[i]);
    }
    ExactCover ec(inst.constraints.size(), rows);
    ec.set_deadline(deadline);
    if (!ec.select(0)) return false;  // local row 0 is the smallest unused face

    bool done = false;
    ec.solve([&](std::span<const std::size_t> local) {
      std::vector<std::size_t> layer;
      for (std::size_t r : local) layer.push_back(global[r]);
      for (std::size_t g : layer) used[g] = true;
      layers.push_back(layer);
      done = fill();
      if (done) return false;
      layers.pop_back();
      for (std::size_t g : layer) used[g] = false;
      return true;
    });
    return done;
  };

  if (!fill()) return std::nullopt;

  Partition out{params, {}};
  for (const auto& layer : layers) {
    std::vector<Codeword> words;
    for (std::size_t g : layer) words.push_back(inst.candidates[g]);
    out.parts.emplace_back(params, std::move(words), ParamPolicy::kAllowZeroT);
  }
  return out;
}

}  // namespace hcd
