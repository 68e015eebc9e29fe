#include "hcd/face.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "hcd/count_math.hpp"

namespace hcd {

Symbol Symbol::value(long long v) {
  if (v < 0 || v >= static_cast<long long>(kStarCode)) {
    throw std::out_of_range("symbol value " + std::to_string(v) + " out of range");
  }
  return Symbol(static_cast<std::uint32_t>(v));
}

std::uint32_t Symbol::value() const {
  if (is_star()) throw std::logic_error("star symbol has no value");
  return code_;
}

void Codeword::validate(std::span<const std::uint32_t> codes, std::uint32_t q) {
  if (q < 1 || q > kMaxAlphabet) throw std::out_of_range("alphabet size must be in [1, 2^32-2]");
  if (codes.empty()) throw std::invalid_argument("codeword length must be at least 1");
  for (std::uint32_t c : codes) {
    if (c != kStarCode && c >= q) {
      throw std::out_of_range("symbol " + std::to_string(c) + " not below q=" + std::to_string(q));
    }
  }
}

Codeword::Codeword(std::span<const Symbol> symbols, std::uint32_t q) : q_(q) {
  codes_.reserve(symbols.size());
  for (Symbol s : symbols) codes_.push_back(s.code());
  validate(codes_, q);
}

Codeword Codeword::from_codes(std::vector<std::uint32_t> codes, std::uint32_t q) {
  validate(codes, q);
  return Codeword(std::move(codes), q);
}

Codeword Codeword::parse(std::string_view text, std::uint32_t q) {
  std::vector<std::uint32_t> codes;
  if (q <= 10) {
    for (char ch : text) {
      if (ch == '*') {
        codes.push_back(kStarCode);
      } else if (ch >= '0' && ch <= '9') {
        codes.push_back(static_cast<std::uint32_t>(ch - '0'));
      } else {
        throw std::invalid_argument("bad symbol '" + std::string(1, ch) + "' in codeword \"" +
                                    std::string(text) + "\"");
      }
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view token =
          text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (token == "*") {
        codes.push_back(kStarCode);
      } else {
        std::uint32_t v = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
          throw std::invalid_argument("bad token \"" + std::string(token) + "\" in codeword \"" +
                                      std::string(text) + "\"");
        }
        codes.push_back(v);
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return from_codes(std::move(codes), q);
}

std::string Codeword::to_string() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(codes_.size());
    for (std::uint32_t c : codes_) out.push_back(c == kStarCode ? '*' : static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i != 0) out.push_back(',');
    if (codes_[i] == kStarCode) {
      out.push_back('*');
    } else {
      out += std::to_string(codes_[i]);
    }
  }
  return out;
}

Symbol Codeword::operator[](std::size_t i) const {
  const std::uint32_t c = codes_.at(i);
  return c == kStarCode ? Symbol::star() : Symbol::value(c);
}

std::size_t CodewordHash::operator()(const Codeword& c) const noexcept {
  // FNV-1a over the codes
  std::uint64_t h = 1469598103934665603ull ^ c.alphabet_size();
  for (std::uint32_t code : c.codes()) {
    h ^= code;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t weight(const Codeword& c) noexcept {
  const auto codes = c.codes();
  return static_cast<std::size_t>(
      std::count_if(codes.begin(), codes.end(), [](std::uint32_t x) { return x != kStarCode; }));
}

namespace {

void require_compatible(const Codeword& a, const Codeword& b) {
  if (a.length() != b.length()) throw std::invalid_argument("codeword length mismatch");
  if (a.alphabet_size() != b.alphabet_size()) throw std::invalid_argument("codeword alphabet mismatch");
}

// Fills positions [pos, n) of `buf`. At each position the value branch (in
// ascending order) precedes the star branch, which yields canonical order.
// `fixed_left` counts the value positions still to be placed.
struct Filler {
  std::span<const std::uint32_t> pattern;  // kStarCode = free, else forced
  std::uint32_t q;
  bool forced_may_star;  // superfaces: a forced value may turn into a star
  const std::function<bool(const Codeword&)>& visit;
  std::vector<std::uint32_t> buf;

  // Returns false once the visitor asks to stop.
  bool run(std::size_t pos, std::size_t fixed_left) {
    const std::size_t n = buf.size();
    if (pos == n) {
      if (fixed_left != 0) return true;
      return visit(Codeword::from_codes(buf, q));
    }
    const std::size_t remaining = n - pos;
    if (fixed_left > remaining) return true;
    const std::uint32_t forced = pattern[pos];
    if (forced == kStarCode) {
      if (!forced_may_star && fixed_left > 0) {
        for (std::uint32_t v = 0; v < q; ++v) {
          buf[pos] = v;
          if (!run(pos + 1, fixed_left - 1)) return false;
        }
      }
      if (forced_may_star || fixed_left < remaining) {
        buf[pos] = kStarCode;
        if (!run(pos + 1, fixed_left)) return false;
      }
    } else {
      if (fixed_left > 0) {
        buf[pos] = forced;
        if (!run(pos + 1, fixed_left - 1)) return false;
      }
      if (forced_may_star && fixed_left < remaining) {
        buf[pos] = kStarCode;
        if (!run(pos + 1, fixed_left)) return false;
      }
    }
    return true;
  }
};

std::vector<Codeword> collect(std::span<const std::uint32_t> pattern, std::uint32_t q, bool may_star,
                              std::size_t target_weight) {
  std::vector<Codeword> out;
  const std::function<bool(const Codeword&)> push = [&out](const Codeword& c) {
    out.push_back(c);
    return true;
  };
  Filler f{pattern, q, may_star, push, std::vector<std::uint32_t>(pattern.size(), kStarCode)};
  f.run(0, target_weight);
  return out;
}

}  // namespace

bool covers(const Codeword& outer, const Codeword& inner) {
  require_compatible(outer, inner);
  const auto o = outer.codes();
  const auto i = inner.codes();
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (o[k] != kStarCode && o[k] != i[k]) return false;
  }
  return true;
}

std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
  require_compatible(a, b);
  const auto x = a.codes();
  const auto y = b.codes();
  std::size_t d = 0;
  for (std::size_t k = 0; k < x.size(); ++k) d += x[k] != y[k];
  return d;
}

std::vector<Codeword> subfaces(const Codeword& c, std::size_t w) {
  if (w < weight(c) || w > c.length()) {
    throw std::out_of_range("subface weight " + std::to_string(w) + " outside [" +
                            std::to_string(weight(c)) + ", " + std::to_string(c.length()) + "]");
  }
  return collect(c.codes(), c.alphabet_size(), false, w);
}

std::vector<Codeword> superfaces(const Codeword& c, std::size_t t) {
  if (t > weight(c)) {
    throw std::out_of_range("superface weight " + std::to_string(t) + " outside [0, " +
                            std::to_string(weight(c)) + "]");
  }
  return collect(c.codes(), c.alphabet_size(), true, t);
}

void for_each_face(std::size_t n, std::uint32_t q, std::size_t w,
                   const std::function<bool(const Codeword&)>& visit) {
  if (n < 1) throw std::out_of_range("n must be at least 1");
  if (q < 1 || q > kMaxAlphabet) throw std::out_of_range("q out of range");
  if (w > n) throw std::out_of_range("weight exceeds n");
  const std::vector<std::uint32_t> pattern(n, kStarCode);
  Filler f{pattern, q, false, visit, std::vector<std::uint32_t>(n, kStarCode)};
  f.run(0, w);
}

std::vector<Codeword> enumerate_faces(std::size_t n, std::uint32_t q, std::size_t w) {
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(face_count(n, q, w)));
  for_each_face(n, q, w, [&out](const Codeword& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t face_count(std::size_t n, std::uint32_t q, std::size_t w) {
  if (w > n) return 0;
  return checked_mul(binomial(static_cast<unsigned>(n), static_cast<unsigned>(w)),
                     checked_pow(q, static_cast<unsigned>(w)));
}

}  // namespace hcd
