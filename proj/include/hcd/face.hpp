#pragma once

// Codewords over the starred alphabet Q_q u {*} and the faces of Q_q^n they
// encode. A word with k stars is a k-dimensional face; its weight is the
// number of non-star positions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcd {

inline constexpr std::uint32_t kStarCode = std::numeric_limits<std::uint32_t>::max();

// Largest alphabet a codeword may use; kStarCode is reserved for '*'.
inline constexpr std::uint32_t kMaxAlphabet = kStarCode - 1;

class Symbol {
 public:
  static constexpr Symbol star() noexcept { return Symbol(kStarCode); }
  // Rejects negative values; the upper bound q is checked by Codeword.
  static Symbol value(long long v);

  constexpr bool is_star() const noexcept { return code_ == kStarCode; }
  std::uint32_t value() const;
  constexpr std::uint32_t code() const noexcept { return code_; }

  friend constexpr bool operator==(Symbol, Symbol) = default;

 private:
  constexpr explicit Symbol(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

class Codeword {
 public:
  Codeword(std::span<const Symbol> symbols, std::uint32_t q);
  Codeword(std::initializer_list<Symbol> symbols, std::uint32_t q)
      : Codeword(std::span<const Symbol>(symbols.begin(), symbols.size()), q) {}

  // Raw codes: values 0..q-1, kStarCode for '*'.
  static Codeword from_codes(std::vector<std::uint32_t> codes, std::uint32_t q);

  // Text form: one character per position ('0'-'9', '*') when q <= 10,
  // otherwise comma-separated decimal tokens.
  static Codeword parse(std::string_view text, std::uint32_t q);
  std::string to_string() const;

  std::size_t length() const noexcept { return codes_.size(); }
  std::uint32_t alphabet_size() const noexcept { return q_; }
  std::span<const std::uint32_t> codes() const noexcept { return codes_; }

  Symbol operator[](std::size_t i) const;
  bool is_star(std::size_t i) const { return codes_.at(i) == kStarCode; }

  // Lexicographic, '*' after every value.
  friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) {
    if (auto c = a.codes_ <=> b.codes_; c != 0) return c;
    return a.q_ <=> b.q_;
  }
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  Codeword(std::vector<std::uint32_t> codes, std::uint32_t q) : codes_(std::move(codes)), q_(q) {}
  static void validate(std::span<const std::uint32_t> codes, std::uint32_t q);

  std::vector<std::uint32_t> codes_;
  std::uint32_t q_;
};

struct CodewordHash {
  std::size_t operator()(const Codeword& c) const noexcept;
};

std::size_t weight(const Codeword& c) noexcept;

// True iff the face of `inner` lies inside the face of `outer`: every fixed
// position of `outer` carries the same value in `inner`.
bool covers(const Codeword& outer, const Codeword& inner);

// Starred Hamming distance: '*' is an ordinary symbol.
std::size_t hamming_distance(const Codeword& a, const Codeword& b);

// All weight-`w` words inside face `c`, canonical order.
std::vector<Codeword> subfaces(const Codeword& c, std::size_t w);

// All weight-`t` words whose face contains `c`, canonical order.
std::vector<Codeword> superfaces(const Codeword& c, std::size_t t);

// Visits every weight-w word of Q_q^n in canonical order. The callback may
// return false to stop early.
void for_each_face(std::size_t n, std::uint32_t q, std::size_t w,
                   const std::function<bool(const Codeword&)>& visit);

std::vector<Codeword> enumerate_faces(std::size_t n, std::uint32_t q, std::size_t w);

// |Q_q^n(w)| = C(n, w) * q^w.
std::uint64_t face_count(std::size_t n, std::uint32_t q, std::size_t w);

}  // namespace hcd
