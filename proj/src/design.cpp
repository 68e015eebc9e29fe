#include "hcd/design.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hcd/count_math.hpp"
#include "hcd/errors.hpp"
#include "hcd/parallel.hpp"

namespace hcd {

char kind_char(Kind k) noexcept { return k == Kind::H ? 'H' : 'A'; }

Kind opposite(Kind k) noexcept { return k == Kind::H ? Kind::A : Kind::H; }

void DesignParams::validate(ParamPolicy policy) const {
  const std::size_t min_t = policy == ParamPolicy::kAllowZeroT ? 0 : 1;
  if (q < 1 || q > kMaxAlphabet) throw std::invalid_argument("q must be at least 1");
  if (!(n >= w && w >= t && t >= min_t) || n < 1) {
    throw std::invalid_argument("parameters " + to_string() + " violate n >= w >= t >= " +
                                std::to_string(min_t));
  }
}

std::string DesignParams::to_string() const {
  return std::string(1, kind_char(kind)) + "(" + std::to_string(n) + "," + std::to_string(q) + "," +
         std::to_string(w) + "," + std::to_string(t) + ")";
}

Design::Design(DesignParams params, std::vector<Codeword> words, ParamPolicy policy)
    : params_(params), words_(std::move(words)) {
  params_.validate(policy);
  const std::size_t expected_weight = params_.word_weight();
  for (const Codeword& c : words_) {
    if (c.length() != params_.n) {
      throw MalformedDesign("word " + c.to_string() + " has length " + std::to_string(c.length()) +
                            ", expected " + std::to_string(params_.n));
    }
    if (c.alphabet_size() != params_.q) {
      throw MalformedDesign("word " + c.to_string() + " uses alphabet " +
                            std::to_string(c.alphabet_size()) + ", expected " +
                            std::to_string(params_.q));
    }
    if (weight(c) != expected_weight) {
      throw MalformedDesign("word " + c.to_string() + " has weight " + std::to_string(weight(c)) +
                            ", expected " + std::to_string(expected_weight));
    }
  }
  std::sort(words_.begin(), words_.end());
  const auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) throw MalformedDesign("duplicate word " + dup->to_string());
}

namespace {

VerificationReport verify_impl(const Design& d, const VerifyOptions& opts) {
  const DesignParams& p = d.params();
  const std::size_t witness_weight = p.witness_weight();

  // incidence count per witness face
  std::unordered_map<Codeword, std::size_t, CodewordHash> hits;
  for (const Codeword& s : d.words()) {
    const auto faces = p.kind == Kind::H ? superfaces(s, witness_weight) : subfaces(s, witness_weight);
    for (const Codeword& b : faces) ++hits[b];
  }

  const std::vector<Codeword> witnesses = enumerate_faces(p.n, p.q, witness_weight);
  const unsigned workers = std::max(1u, opts.workers);
  const std::size_t chunks = std::min<std::size_t>(workers, witnesses.size());
  std::vector<std::vector<Violation>> partial(chunks);
  parallel_for(workers, chunks, [&](std::size_t chunk) {
    const std::size_t begin = witnesses.size() * chunk / chunks;
    const std::size_t end = witnesses.size() * (chunk + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) {
      const auto it = hits.find(witnesses[i]);
      const std::size_t count = it == hits.end() ? 0 : it->second;
      if (count != 1) partial[chunk].push_back({witnesses[i], count});
    }
  });

  VerificationReport report;
  for (auto& part : partial) {
    for (auto& v : part) report.violations.push_back(std::move(v));
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace

VerificationReport verify_h(const Design& d, const VerifyOptions& opts) {
  if (d.params().kind != Kind::H) throw std::invalid_argument("verify_h needs an H design");
  return verify_impl(d, opts);
}

VerificationReport verify_a(const Design& d, const VerifyOptions& opts) {
  if (d.params().kind != Kind::A) throw std::invalid_argument("verify_a needs an A design");
  return verify_impl(d, opts);
}

VerificationReport verify(const Design& d, const VerifyOptions& opts) { return verify_impl(d, opts); }

Cardinality expected_cardinality(const DesignParams& p) {
  const auto n = static_cast<unsigned>(p.n);
  const auto w = static_cast<unsigned>(p.w);
  const auto t = static_cast<unsigned>(p.t);
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  if (p.kind == Kind::H) {
    // each weight-t face holds one word; each word lies under C(w,t) of them
    num = checked_mul(binomial(n, t), checked_pow(p.q, t));
    den = binomial(w, t);
  } else {
    // each weight-w face lies in one word; each word contains C(n-t,n-w) q^(w-t)
    num = checked_mul(binomial(n, w), checked_pow(p.q, w));
    den = checked_mul(binomial(n - t, n - w), checked_pow(p.q, w - t));
  }
  const std::uint64_t g = gcd_u64(num, den);
  return {num / g, den / g};
}

std::optional<std::size_t> min_distance(std::span<const Codeword> words) {
  if (words.size() < 2) return std::nullopt;
  std::size_t best = words[0].length() + 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, hamming_distance(words[i], words[j]));
    }
  }
  return best;
}

std::optional<std::size_t> min_distance(const Design& d) { return min_distance(std::span(d.words())); }

bool is_generalized_steiner(const Design& d) {
  if (d.params().kind != Kind::H) throw std::invalid_argument("generalized Steiner check needs an H design");
  const auto dist = min_distance(d);
  if (!dist) throw std::invalid_argument("minimum distance undefined for fewer than two words");
  return *dist >= 1 + 2 * (d.params().w - d.params().t);
}

}  // namespace hcd
