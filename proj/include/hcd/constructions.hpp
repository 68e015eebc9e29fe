#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hcd/design.hpp"

namespace hcd {

// Symbol pairing Q_q x Q_q' -> Q_{qq'}, (a, b) -> a*q' + b.
struct PairEncoding {
  std::uint32_t q;
  std::uint32_t q_inner;

  // Throws std::overflow_error when q*q' does not fit an alphabet.
  std::uint32_t combined_alphabet() const;
  std::uint32_t encode(std::uint32_t a, std::uint32_t b) const noexcept { return a * q_inner + b; }
  std::uint32_t outer(std::uint32_t c) const noexcept { return c / q_inner; }
  std::uint32_t inner(std::uint32_t c) const noexcept { return c % q_inner; }
};

// Zero-sum code {x in Q_q^m : sum x = 0 mod q}, an H(m,q,m,m-1) design.
Design mds_distance2(std::size_t m, std::uint32_t q);

// Product of an H(n,q,w,t) design with H(w,q',w,t) MDS codes. The codes in
// `inner` are assigned round-robin to the words of `outer` in canonical order,
// so a single code applies to every word. Position j of the inner word pairs
// with the j-th fixed position of the outer word. Every input is verified
// first (VerificationFailed otherwise).
Design construct_i(const Design& outer, std::span<const Design> inner);
Design construct_i(const Design& outer, const Design& inner);

// H(2^{t+1}, s 2^t, 2^{t+1}-1, 2^{t+1}-2). For t = 1 the base design is
// found by search when none is given; for t >= 2 `base` is required.
Design corollary2(std::size_t t, std::uint32_t s, const std::optional<Design>& base = std::nullopt);

// A(n,q,w,t) -> A(n,qq',w,t): every word paired with every b in Q_q'^t.
Design construct_ii(const Design& s, std::uint32_t q_inner);

// A(n,q,n-1,n-2) -> A(2n,q,2n-1,2n-2): (S x Q_q^n) u (Q_q^n x S). Accepts the
// t = 0 base {*...*} of shape (2,q,1,0).
Design construct_iii(const Design& s);

// Steiner blocks (1-based point sets of size w) as an H(n,1,w,t) word set:
// value 0 on the block, '*' elsewhere. Not verified.
Design from_steiner(std::span<const std::vector<std::size_t>> blocks, std::size_t n, std::size_t w,
                    std::size_t t);

}  // namespace hcd
