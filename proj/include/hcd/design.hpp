#pragma once

// H(n,q,w,t) designs: weight-w words such that every weight-t word covers
// exactly one of them. A(n,q,w,t) designs: weight-t words such that every
// weight-w word is covered by exactly one of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcd/face.hpp"

namespace hcd {

enum class Kind { H, A };

char kind_char(Kind k) noexcept;
Kind opposite(Kind k) noexcept;

enum class ParamPolicy {
  kStrict,      // n >= w >= t >= 1
  kAllowZeroT,  // also accepts t = 0
};

struct DesignParams {
  Kind kind = Kind::H;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t w = 0;
  std::size_t t = 0;

  // Throws std::invalid_argument when the quadruple is out of range.
  void validate(ParamPolicy policy = ParamPolicy::kStrict) const;

  // Weight of the design's own words (w for H, t for A).
  std::size_t word_weight() const noexcept { return kind == Kind::H ? w : t; }
  // Weight of the faces the property quantifies over (t for H, w for A).
  std::size_t witness_weight() const noexcept { return kind == Kind::H ? t : w; }

  std::string to_string() const;  // e.g. "H(4,2,3,2)"

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

class Design {
 public:
  // Sorts the words canonically. Throws MalformedDesign on a length, alphabet
  // or weight mismatch and on duplicates; std::invalid_argument on bad params.
  Design(DesignParams params, std::vector<Codeword> words,
         ParamPolicy policy = ParamPolicy::kStrict);

  const DesignParams& params() const noexcept { return params_; }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  DesignParams params_;
  std::vector<Codeword> words_;
};

struct Violation {
  Codeword witness;
  std::size_t count;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // canonical witness order
};

struct VerifyOptions {
  unsigned workers = 1;
};

VerificationReport verify_h(const Design& d, const VerifyOptions& opts = {});
VerificationReport verify_a(const Design& d, const VerifyOptions& opts = {});
// Dispatches on the design's kind.
VerificationReport verify(const Design& d, const VerifyOptions& opts = {});

struct Cardinality {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;  // reduced; 1 iff integral

  bool integral() const noexcept { return denominator == 1; }
};

// Double-counting size of any design with these parameters. A non-integral
// value proves that no such design exists.
Cardinality expected_cardinality(const DesignParams& params);

// Minimum pairwise starred Hamming distance; nullopt for fewer than two words.
std::optional<std::size_t> min_distance(const Design& d);
std::optional<std::size_t> min_distance(std::span<const Codeword> words);

// min_distance >= 1 + 2(w - t). Requires an H design with at least two words.
bool is_generalized_steiner(const Design& d);

}  // namespace hcd
