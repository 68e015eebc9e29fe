#include <doctest.h>

#include "hcd/constructions.hpp"
#include "hcd/count_math.hpp"
#include "hcd/errors.hpp"
#include "hcd/search.hpp"

using namespace hcd;

namespace {

Design make(Kind kind, std::size_t n, std::uint32_t q, std::size_t w, std::size_t t,
            std::initializer_list<const char*> words, ParamPolicy policy = ParamPolicy::kStrict) {
  std::vector<Codeword> v;
  for (const char* s : words) v.push_back(Codeword::parse(s, q));
  return Design({kind, n, q, w, t}, std::move(v), policy);
}

std::vector<std::string> texts(const Design& d) {
  std::vector<std::string> out;
  for (const auto& c : d.words()) out.push_back(c.to_string());
  return out;
}

Design first_design(const DesignParams& p) {
  SearchOptions o;
  o.max_solutions = 1;
  auto found = search_design(p, o);
  REQUIRE(!found.empty());
  return found.front();
}

// H(m,q,m,m-1) codes with coordinate sum = shift (mod q).
Design shifted_sum_code(std::size_t m, std::uint32_t q, std::uint32_t shift) {
  std::vector<Codeword> words;
  for (const auto& c : enumerate_faces(m, q, m)) {
    std::uint64_t s = 0;
    for (auto v : c.codes()) s += v;
    if (s % q == shift) words.push_back(c);
  }
  return Design({Kind::H, m, q, m, m - 1}, words);
}

}  // namespace

TEST_CASE("pair encoding") {
  const PairEncoding e{2, 3};
  CHECK(e.combined_alphabet() == 6);
  CHECK(e.encode(1, 2) == 5);
  CHECK(e.outer(5) == 1);
  CHECK(e.inner(5) == 2);
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      CHECK(e.outer(e.encode(a, b)) == a);
      CHECK(e.inner(e.encode(a, b)) == b);
    }
  }
  CHECK_THROWS_AS((PairEncoding{1u << 20, 1u << 20}.combined_alphabet()), std::overflow_error);
}

TEST_CASE("mds_distance2") {
  CHECK(texts(mds_distance2(2, 2)) == std::vector<std::string>{"00", "11"});
  CHECK(texts(mds_distance2(2, 3)) == std::vector<std::string>{"00", "12", "21"});
  CHECK(texts(mds_distance2(3, 2)) == std::vector<std::string>{"000", "011", "101", "110"});
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::uint32_t q = 2; q <= 4; ++q) {
      const Design d = mds_distance2(m, q);
      CHECK(verify_h(d).valid);
      CHECK(d.size() == checked_pow(q, static_cast<unsigned>(m - 1)));
      CHECK(*min_distance(d) == 2);
    }
  }
  CHECK_THROWS_AS(mds_distance2(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(mds_distance2(2, 1), std::invalid_argument);
}

TEST_CASE("construct_i examples") {
  const Design s = make(Kind::H, 2, 2, 2, 1, {"00", "11"});
  const Design r = make(Kind::H, 2, 3, 2, 1, {"00", "12", "21"});
  const Design t = construct_i(s, r);
  CHECK(t.params() == DesignParams{Kind::H, 2, 6, 2, 1});
  CHECK(texts(t) == std::vector<std::string>{"00", "12", "21", "33", "45", "54"});
  CHECK(verify_h(t).valid);

  const Design trivial = make(Kind::H, 2, 1, 2, 1, {"00"});
  CHECK(construct_i(s, trivial).words() == s.words());

  const Design base = first_design({Kind::H, 4, 2, 3, 2});
  const Design big = construct_i(base, mds_distance2(3, 2));
  CHECK(big.params() == DesignParams{Kind::H, 4, 4, 3, 2});
  CHECK(big.size() == 32);
  CHECK(verify_h(big).valid);
}

TEST_CASE("construct_i with per-word inner codes") {
  const Design base = first_design({Kind::H, 4, 2, 3, 2});
  const std::vector<Design> codes{shifted_sum_code(3, 3, 0), shifted_sum_code(3, 3, 1)};
  REQUIRE(verify_h(codes[1]).valid);
  const Design t = construct_i(base, codes);
  CHECK(t.size() == base.size() * 9);
  CHECK(verify_h(t).valid);
  CHECK(t != construct_i(base, codes[0]));
}

TEST_CASE("construct_i rejects bad inputs") {
  const Design s = make(Kind::H, 2, 2, 2, 1, {"00", "11"});
  const Design not_design = make(Kind::H, 2, 2, 2, 1, {"00", "01"});
  const Design r = mds_distance2(2, 3);
  CHECK_THROWS_AS(construct_i(not_design, r), VerificationFailed);
  CHECK_THROWS_AS(construct_i(s, make(Kind::H, 2, 3, 2, 1, {"00", "11"})), VerificationFailed);
  CHECK_THROWS_AS(construct_i(s, mds_distance2(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(construct_i(s, std::span<const Design>{}), std::invalid_argument);
}

TEST_CASE("construct_i closure over searched inputs") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint32_t q = 1; q <= 3; ++q) {
      for (std::size_t w = 1; w <= n; ++w) {
        for (std::size_t t = 1; t <= w; ++t) {
          SearchOptions o;
          o.max_solutions = 2;
          const auto outers = search_design({Kind::H, n, q, w, t}, o);
          for (std::uint32_t qi = 1; qi <= 3; ++qi) {
            const auto inners = search_design({Kind::H, w, qi, w, t}, o);
            for (const Design& s : outers) {
              for (const Design& r : inners) {
                const Design out = construct_i(s, r);
                REQUIRE(verify_h(out).valid);
                CHECK(out.size() == s.size() * r.size());
                CHECK(out.size() == expected_cardinality(out.params()).numerator);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("corollary2") {
  const std::size_t sizes[] = {8, 32, 72};
  for (std::uint32_t s = 1; s <= 3; ++s) {
    const Design d = corollary2(1, s);
    CHECK(d.params() == DesignParams{Kind::H, 4, 2 * s, 3, 2});
    CHECK(d.size() == sizes[s - 1]);
    CHECK(verify_h(d).valid);
  }
  CHECK_THROWS_AS(corollary2(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(corollary2(1, 2, mds_distance2(2, 2)), std::invalid_argument);
  const Design base = first_design({Kind::H, 4, 2, 3, 2});
  CHECK(corollary2(1, 1, base) == base);
}

TEST_CASE("construct_ii") {
  const Design s = make(Kind::A, 2, 2, 2, 1, {"*0", "*1"});
  const Design u = construct_ii(s, 2);
  CHECK(u.params() == DesignParams{Kind::A, 2, 4, 2, 1});
  CHECK(texts(u) == std::vector<std::string>{"*0", "*1", "*2", "*3"});
  CHECK(verify_a(u).valid);
  CHECK(construct_ii(s, 1).words() == s.words());

  const Design a4 = make(Kind::A, 4, 2, 3, 2, {"**00", "**01", "**10", "**11", "00**", "01**", "10**", "11**"});
  const Design a44 = construct_ii(a4, 2);
  CHECK(a44.size() == 32);
  CHECK(verify_a(a44).valid);

  CHECK_THROWS_AS(construct_ii(make(Kind::A, 2, 2, 2, 1, {"*0", "0*"}), 2), VerificationFailed);
  CHECK_THROWS_AS(construct_ii(mds_distance2(2, 2), 2), std::invalid_argument);
}

TEST_CASE("construct_ii closure over searched inputs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t q = 1; q <= 3; ++q) {
      for (std::size_t w = 1; w <= n; ++w) {
        for (std::size_t t = 1; t <= w; ++t) {
          if (n == 4 && q == 3) continue;
          SearchOptions o;
          o.max_solutions = 2;
          for (const Design& s : search_design({Kind::A, n, q, w, t}, o)) {
            for (std::uint32_t qi = 1; qi <= 3; ++qi) {
              const Design u = construct_ii(s, qi);
              REQUIRE(verify_a(u).valid);
              CHECK(u.size() == s.size() * checked_pow(qi, static_cast<unsigned>(t)));
              CHECK(u.size() == expected_cardinality(u.params()).numerator);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("construct_iii chain") {
  for (std::uint32_t q = 2; q <= 3; ++q) {
    const Design base({Kind::A, 2, q, 1, 0}, {Codeword::parse("**", q)}, ParamPolicy::kAllowZeroT);
    const Design v4 = construct_iii(base);
    CHECK(v4.params() == DesignParams{Kind::A, 4, q, 3, 2});
    CHECK(v4.size() == 2 * q * q);
    CHECK(verify_a(v4).valid);
    const Design v8 = construct_iii(v4);
    CHECK(v8.params() == DesignParams{Kind::A, 8, q, 7, 6});
    CHECK(v8.size() == 2 * v4.size() * checked_pow(q, 4));
    CHECK(verify_a(v8).valid);
    CHECK(v8.size() == expected_cardinality(v8.params()).numerator);
  }
  const Design base({Kind::A, 2, 2, 1, 0}, {Codeword::parse("**", 2)}, ParamPolicy::kAllowZeroT);
  CHECK(texts(construct_iii(base)) ==
        std::vector<std::string>{"00**", "01**", "10**", "11**", "**00", "**01", "**10", "**11"});

  CHECK_THROWS_AS(construct_iii(make(Kind::A, 2, 2, 2, 1, {"*0", "*1"})), std::invalid_argument);
  CHECK_THROWS_AS(construct_iii(make(Kind::A, 3, 2, 2, 1, {"0**", "1**"})), VerificationFailed);
}

TEST_CASE("from_steiner") {
  const std::vector<std::vector<std::size_t>> singletons{{1}, {2}, {3}};
  const Design s1 = from_steiner(singletons, 3, 1, 1);
  CHECK(s1.size() == 3);
  CHECK(verify_h(s1).valid);

  const std::vector<std::vector<std::size_t>> matching{{1, 2}, {3, 4}};
  const Design m = from_steiner(matching, 4, 2, 1);
  CHECK(texts(m) == std::vector<std::string>{"00**", "**00"});
  CHECK(verify_h(m).valid);

  const std::vector<std::vector<std::size_t>> overlap{{1, 2}, {1, 3}};
  const auto rep = verify_h(from_steiner(overlap, 3, 2, 1));
  CHECK_FALSE(rep.valid);
  CHECK(rep.violations.front() == Violation{Codeword::parse("0**", 1), 2});

  const std::vector<std::vector<std::size_t>> wrong{{1, 2, 3}};
  CHECK_THROWS_AS(from_steiner(wrong, 3, 2, 1), std::invalid_argument);
  const std::vector<std::vector<std::size_t>> outside{{1, 5}};
  CHECK_THROWS_AS(from_steiner(outside, 3, 2, 1), std::out_of_range);
}
