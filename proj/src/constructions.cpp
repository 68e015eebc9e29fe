#include "hcd/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hcd/count_math.hpp"
#include "hcd/errors.hpp"
#include "hcd/search.hpp"

namespace hcd {

std::uint32_t PairEncoding::combined_alphabet() const {
  std::uint32_t r = 0;
  if (__builtin_mul_overflow(q, q_inner, &r) || r > kMaxAlphabet) {
    throw std::overflow_error("combined alphabet " + std::to_string(q) + "*" + std::to_string(q_inner) +
                              " overflows");
  }
  return r;
}

namespace {

void require_valid(const Design& d, const char* role) {
  const VerificationReport report = verify(d);
  if (!report.valid) {
    const Violation& v = report.violations.front();
    throw VerificationFailed(std::string(role) + " " + d.params().to_string() + " is not a design: face " +
                             v.witness.to_string() + " has count " + std::to_string(v.count));
  }
}

// Calls visit(x) for every x in Q_q^len in lexicographic order.
template <typename Visit>
void for_each_tuple(std::size_t len, std::uint32_t q, Visit&& visit) {
  std::vector<std::uint32_t> x(len, 0);
  while (true) {
    visit(static_cast<const std::vector<std::uint32_t>&>(x));
    std::size_t i = len;
    while (i > 0) {
      if (++x[i - 1] < q) break;
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

// Pairs the fixed positions of `word` (in ascending order) with `tail`.
Codeword pair_word(const Codeword& word, std::span<const std::uint32_t> tail, const PairEncoding& enc,
                   std::uint32_t alphabet) {
  std::vector<std::uint32_t> codes(word.codes().begin(), word.codes().end());
  std::size_t j = 0;
  for (auto& c : codes) {
    if (c == kStarCode) continue;
    c = enc.encode(c, tail[j++]);
  }
  return Codeword::from_codes(std::move(codes), alphabet);
}

}  // namespace

Design mds_distance2(std::size_t m, std::uint32_t q) {
  if (m < 2) throw std::invalid_argument("mds_distance2 needs m >= 2");
  if (q < 2) throw std::invalid_argument("mds_distance2 needs q >= 2");
  std::vector<Codeword> words;
  words.reserve(static_cast<std::size_t>(checked_pow(q, static_cast<unsigned>(m - 1))));
  for_each_tuple(m, q, [&](const std::vector<std::uint32_t>& x) {
    std::uint64_t sum = 0;
    for (std::uint32_t v : x) sum += v;
    if (sum % q == 0) words.push_back(Codeword::from_codes(x, q));
  });
  return Design({Kind::H, m, q, m, m - 1}, std::move(words));
}

Design construct_i(const Design& outer, std::span<const Design> inner) {
  const DesignParams& p = outer.params();
  if (p.kind != Kind::H) throw std::invalid_argument("construct_i needs an H design as outer input");
  if (inner.empty()) throw std::invalid_argument("construct_i needs at least one inner code");
  const std::uint32_t q_inner = inner.front().params().q;
  for (const Design& r : inner) {
    const DesignParams expected{Kind::H, p.w, q_inner, p.w, p.t};
    if (r.params() != expected) {
      throw std::invalid_argument("inner code " + r.params().to_string() + " does not match " +
                                  expected.to_string());
    }
  }
  const PairEncoding enc{p.q, q_inner};
  const std::uint32_t alphabet = enc.combined_alphabet();

  require_valid(outer, "outer input");
  for (const Design& r : inner) require_valid(r, "inner code");

  std::vector<Codeword> words;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const Design& r = inner[i % inner.size()];
    for (const Codeword& b : r.words()) {
      words.push_back(pair_word(outer.words()[i], b.codes(), enc, alphabet));
    }
  }
  return Design({Kind::H, p.n, alphabet, p.w, p.t}, std::move(words));
}

Design construct_i(const Design& outer, const Design& inner) {
  return construct_i(outer, std::span<const Design>(&inner, 1));
}

Design corollary2(std::size_t t, std::uint32_t s, const std::optional<Design>& base) {
  if (t < 1) throw std::invalid_argument("corollary2 needs t >= 1");
  if (s < 1) throw std::invalid_argument("corollary2 needs s >= 1");
  if (t >= 31) throw std::overflow_error("2^(t+1) overflows");
  const std::size_t n = std::size_t{1} << (t + 1);
  const std::uint32_t base_q = std::uint32_t{1} << t;
  const DesignParams base_params{Kind::H, n, base_q, n - 1, n - 2};
  PairEncoding{s, base_q}.combined_alphabet();  // throws on s*2^t overflow

  Design start = [&]() -> Design {
    if (base) {
      if (base->params() != base_params) {
        throw std::invalid_argument("base design " + base->params().to_string() + " is not " +
                                    base_params.to_string());
      }
      require_valid(*base, "base design");
      return *base;
    }
    if (t >= 2) {
      throw std::invalid_argument("corollary2 with t >= 2 needs a base " + base_params.to_string() +
                                  " design file");
    }
    SearchOptions opts;
    opts.max_solutions = 1;
    auto found = search_design(base_params, opts);
    if (found.empty()) throw Error("no base design " + base_params.to_string() + " found");
    return std::move(found.front());
  }();

  if (s == 1) return start;
  return construct_i(start, mds_distance2(n - 1, s));
}

Design construct_ii(const Design& s, std::uint32_t q_inner) {
  const DesignParams& p = s.params();
  if (p.kind != Kind::A) throw std::invalid_argument("construct_ii needs an A design");
  if (q_inner < 1) throw std::invalid_argument("construct_ii needs q' >= 1");
  const PairEncoding enc{p.q, q_inner};
  const std::uint32_t alphabet = enc.combined_alphabet();
  require_valid(s, "input");

  std::vector<Codeword> words;
  for (const Codeword& a : s.words()) {
    for_each_tuple(p.t, q_inner, [&](const std::vector<std::uint32_t>& b) {
      words.push_back(pair_word(a, b, enc, alphabet));
    });
  }
  return Design({Kind::A, p.n, alphabet, p.w, p.t}, std::move(words), ParamPolicy::kAllowZeroT);
}

Design construct_iii(const Design& s) {
  const DesignParams& p = s.params();
  if (p.kind != Kind::A || p.n < 2 || p.w != p.n - 1 || p.t != p.n - 2) {
    throw std::invalid_argument("construct_iii needs an A(n,q,n-1,n-2) design, got " + p.to_string());
  }
  require_valid(s, "input");

  const std::size_t n = p.n;
  std::vector<Codeword> words;
  words.reserve(2 * s.size() * static_cast<std::size_t>(checked_pow(p.q, static_cast<unsigned>(n))));
  std::vector<std::uint32_t> codes(2 * n);
  for (const Codeword& a : s.words()) {
    for_each_tuple(n, p.q, [&](const std::vector<std::uint32_t>& x) {
      std::copy(a.codes().begin(), a.codes().end(), codes.begin());
      std::copy(x.begin(), x.end(), codes.begin() + static_cast<std::ptrdiff_t>(n));
      words.push_back(Codeword::from_codes(codes, p.q));
      std::copy(x.begin(), x.end(), codes.begin());
      std::copy(a.codes().begin(), a.codes().end(), codes.begin() + static_cast<std::ptrdiff_t>(n));
      words.push_back(Codeword::from_codes(codes, p.q));
    });
  }
  return Design({Kind::A, 2 * n, p.q, 2 * n - 1, 2 * n - 2}, std::move(words));
}

Design from_steiner(std::span<const std::vector<std::size_t>> blocks, std::size_t n, std::size_t w,
                    std::size_t t) {
  const DesignParams params{Kind::H, n, 1, w, t};
  params.validate();
  std::vector<Codeword> words;
  words.reserve(blocks.size());
  for (const auto& block : blocks) {
    if (block.size() != w) {
      throw std::invalid_argument("block of size " + std::to_string(block.size()) + ", expected " +
                                  std::to_string(w));
    }
    std::vector<std::uint32_t> codes(n, kStarCode);
    for (std::size_t point : block) {
      if (point < 1 || point > n) throw std::out_of_range("block point " + std::to_string(point) + " out of range");
      if (codes[point - 1] == 0) throw std::invalid_argument("block repeats point " + std::to_string(point));
      codes[point - 1] = 0;
    }
    words.push_back(Codeword::from_codes(std::move(codes), 1));
  }
  return Design(params, std::move(words));
}

}  // namespace hcd
