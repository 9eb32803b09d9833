#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace typeseq;
using namespace typeseq::test;
using QF = RationalField;

TEST_CASE("expression parser") {
  const std::vector<std::string> names{"a", "b"};
  auto p = parse_symbol_poly("3*a^2*b - 1/2 + a*a", names);
  CHECK(p.size() == 3);
  CHECK(p.at({2, 1}) == 3);
  CHECK(p.at({2, 0}) == 1);
  CHECK(p.at({0, 0}) == mpq_class(-1, 2));
  CHECK(parse_symbol_poly("a*b + b*a", names) == parse_symbol_poly("2*a*b", names));
  CHECK(parse_symbol_poly("a - a", names).empty());
  CHECK(parse_symbol_poly("-2/4*b", names) == parse_symbol_poly("-1/2*b", names));

  auto s = parse_series_poly("i*X^3 + X^4 - (1 + i)*X", {"i"});
  CHECK(s.size() == 3);
  CHECK(s.at(1).at({1}) == -1);
  CHECK(s.at(3).at({1}) == 1);
  CHECK(parse_series_poly("2*X^3 - 2*X^3", {}).empty());
  CHECK_THROWS_AS(parse_series_poly("X*X^2", {}), Error);
}

TEST_CASE("expression parser errors carry a position") {
  const std::vector<std::string> names{"a"};
  for (const char* bad : {"a +", "q", "1/0", "a^", "(a", "a ) ", "3/"}) {
    try {
      parse_symbol_poly(bad, names);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_symbol_poly("X", names), Error);
  CHECK_THROWS_AS(check_generator_name("X", {}), Error);
  CHECK_THROWS_AS(check_generator_name("a", {"a"}), Error);
  CHECK_THROWS_AS(check_generator_name("2a", {}), Error);
  CHECK_NOTHROW(check_generator_name("t_1", {"a"}));
}

TEST_CASE("truncated series arithmetic") {
  auto K = q_i();
  auto x = parse_series("i*X^3 + X^4", K, 10);
  auto y = parse_series("X^5", K, 12);
  auto xy = ts_mul(x, y);
  CHECK(xy.bound() == 10);
  CHECK(format_series(xy) == "i*X^8 + X^9");
  CHECK(ts_valuation(x) == 3u);
  CHECK_FALSE(ts_valuation(TruncSeries<QF>(K, 5)).has_value());
  CHECK(format_series(ts_mul(x, x)) == "-X^6 + 2*i*X^7 + X^8");
  CHECK(format_series(ts_sub(x, x)) == "0");
  CHECK_THROWS_AS(parse_series("X^10", K, 10), Error);
  CHECK_THROWS_AS(TruncSeries<QF>::monomial(K, 4, K->one(), 4), Error);
  CHECK(format_series(ts_shift_extend(x, -2, 12)) == "i*X + X^2");
  CHECK_THROWS_AS(ts_shift_extend(x, -4, 12), Error);
  CHECK_THROWS_AS(ts_add(x, parse_series("X", q_sqrt2_sqrt3(), 10)), Error);
}

TEST_CASE("series ring axioms on random elements") {
  std::mt19937_64 rng(5);
  auto K = q_sqrt2_sqrt3();
  auto rand_series = [&](std::size_t bound) {
    return TruncSeries<QF>::from_coords(K, random_vector(K->scalars(), 4 * bound, rng, 2));
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto x = rand_series(6), y = rand_series(6), z = rand_series(6);
    CHECK(ts_mul(x, y) == ts_mul(y, x));
    CHECK(ts_mul(ts_mul(x, y), z) == ts_mul(x, ts_mul(y, z)));
    CHECK(ts_mul(x, ts_add(y, z)) == ts_add(ts_mul(x, y), ts_mul(x, z)));
    auto one = TruncSeries<QF>::monomial(K, 6, K->one(), 0);
    CHECK(ts_mul(one, x) == x);
    // v(xy) = v(x) + v(y) while the product stays below the bound
    auto vx = x.valuation(), vy = y.valuation();
    if (vx && vy && *vx + *vy < 6) CHECK(ts_mul(x, y).valuation() == *vx + *vy);
  }
}

TEST_CASE("series printing round-trips") {
  std::mt19937_64 rng(9);
  auto K = q_sqrt2_sqrt3();
  for (int trial = 0; trial < 50; ++trial) {
    auto x = TruncSeries<QF>::from_coords(K, random_vector(K->scalars(), 4 * 5, rng, 3));
    CHECK(parse_series(format_series(x), K, 5) == x);
  }
  auto P = build_tower(PrimeField(7), {});
  CHECK(format_series(parse_series("X^6 + X^7 - X^2", P, 8)) == "6*X^2 + X^6 + X^7");
  CHECK(format_series(parse_series("1/2*X", P, 8)) == "4*X");
  CHECK_THROWS_AS(parse_series("1/7*X", P, 8), Error);
}
