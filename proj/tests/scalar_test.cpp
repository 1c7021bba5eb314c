#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "toricmld/types.hpp"

using namespace toricmld;
using namespace toricmld::testsupport;

TEST_CASE("integer parsing accepts strict decimals only") {
  CHECK(Integer::from_string("0") == Integer(0));
  CHECK(Integer::from_string("-17") == Integer(-17));
  CHECK(Integer::from_string("12345678901234567890").str() == "12345678901234567890");
  for (const char* bad : {"", "-", "+3", "1.5", "12a", " 1", "0x10"})
    CHECK(code_of([&] { Integer::from_string(bad); }) == Errc::InvalidInput);
}

TEST_CASE("integer arithmetic and helpers") {
  Integer a(-7), b(2);
  CHECK(a + b == Integer(-5));
  CHECK(a * b == Integer(-14));
  CHECK(-a == Integer(7));
  CHECK(abs(a) == Integer(7));
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(divexact(Integer(-14), Integer(2)) == Integer(-7));
  CHECK(fdiv(a, b) == Integer(-4));
  CHECK(cdiv(a, b) == Integer(-3));
  CHECK(fdiv(Integer(7), Integer(2)) == Integer(3));
  CHECK(cdiv(Integer(7), Integer(2)) == Integer(4));
  CHECK(Integer(5).is_one() == false);
  CHECK(Integer(1).is_one());
  CHECK(Integer(0).is_zero());
  CHECK(Integer(-3).sign() == -1);
}

TEST_CASE("integer to_long guards machine range") {
  Integer big = Integer::from_string("1208925819614629174706176");  // 2^80
  CHECK(!big.fits_long());
  CHECK(code_of([&] { big.to_long(); }) == Errc::ResourceLimit);
  CHECK(Integer(42).to_long() == 42);
}

TEST_CASE("rationals are kept canonical") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(code_of([] { Rational(Integer(1), Integer(0)); }) == Errc::InvalidInput);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
  CHECK(Rational::from_string("7") == Rational(7));
  for (const char* bad : {"", "1/0", "1.5", "1/ 2", "1/-2", "+1", "a", "1/2/3"})
    CHECK(code_of([&] { Rational::from_string(bad); }) == Errc::InvalidInput);
}

TEST_CASE("rational floor and ceiling") {
  CHECK(Rational(7, 2).floor() == Integer(3));
  CHECK(Rational(7, 2).ceil() == Integer(4));
  CHECK(Rational(-7, 2).floor() == Integer(-4));
  CHECK(Rational(-7, 2).ceil() == Integer(-3));
  CHECK(Rational(3).floor() == Integer(3));
  CHECK(Rational(3).ceil() == Integer(3));
}

TEST_CASE("rational arithmetic is exact") {
  Rational x(1, 3), y(1, 6);
  CHECK(x + y == Rational(1, 2));
  CHECK(x - y == Rational(1, 6));
  CHECK(x * y == Rational(1, 18));
  CHECK(x / y == Rational(2));
  CHECK(code_of([&] { x / Rational(0); }) == Errc::InvalidInput);
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("denominator clearing and primitive part") {
  RationalVector v = rv({"1/2", "1/3", "0"});
  CHECK(common_denominator(v) == Integer(6));
  auto [num, den] = clear_denominators(v);
  CHECK(den == Integer(6));
  CHECK(vec_eq(num, iv({3, 2, 0})));
  CHECK(vec_eq(primitive_part(iv({4, -6, 8})), iv({2, -3, 4})));
  CHECK(vec_eq(primitive_part(iv({0, 0})), iv({0, 0})));
  CHECK(vec_eq(primitive_part(iv({0, 5})), iv({0, 1})));
}

TEST_CASE("lexicographic vector order") {
  CHECK(lex_less(rv({"1/3", "2/3"}), rv({"2/3", "1/3"})));
  CHECK(!lex_less(rv({"1/2"}), rv({"1/2"})));
  CHECK(lex_less(rv({"1/2", "0"}), rv({"1/2", "1"})));
}

TEST_CASE("exact rank") {
  CHECK(rank_exact(rm({{"1", "2"}, {"2", "4"}})) == 1);
  CHECK(rank_exact(rm({{"1", "0"}, {"0", "1"}})) == 2);
  CHECK(rank_exact(rm({{"0", "0"}, {"0", "0"}})) == 0);
  CHECK(rank_exact(rm({{"1/2", "1/3", "1"}, {"1", "2/3", "3"}, {"0", "1", "7"}})) == 3);
}

TEST_CASE("exact determinant") {
  CHECK(determinant_exact(rm({{"1", "2"}, {"3", "4"}})) == Rational(-2));
  CHECK(determinant_exact(rm({{"1/2", "0"}, {"0", "1/3"}})) == Rational(1, 6));
  CHECK(determinant_exact(rm({{"1", "2"}, {"2", "4"}})) == Rational(0));
  CHECK(code_of([] { determinant_exact(RationalMatrix(2, 3)); }) == Errc::InvalidInput);
}

TEST_CASE("exact linear solve") {
  RationalMatrix a = rm({{"2", "1"}, {"1", "3"}});
  auto x = solve_exact(a, rv({"4", "7"}));
  REQUIRE(x.has_value());
  CHECK(vec_eq(*x, rv({"1", "2"})));

  // Overdetermined but consistent.
  RationalMatrix tall = rm({{"1", "0"}, {"0", "1"}, {"1", "1"}});
  auto y = solve_exact(tall, rv({"1/2", "1/3", "5/6"}));
  REQUIRE(y.has_value());
  CHECK(vec_eq(*y, rv({"1/2", "1/3"})));

  // Inconsistent: target outside the column span.
  CHECK(!solve_exact(tall, rv({"1/2", "1/3", "1"})).has_value());

  // Rank-deficient columns are a caller error.
  CHECK(code_of([] {
          solve_exact(rm({{"1", "2"}, {"2", "4"}}), rv({"1", "2"}));
        }) == Errc::InvalidInput);
  CHECK(code_of([] { solve_exact(rm({{"1"}}), rv({"1", "2"})); }) == Errc::InvalidInput);
}

TEST_CASE("hyperplane normal") {
  auto n = hyperplane_normal(rm({{"1", "0", "0"}, {"0", "1", "0"}}));
  REQUIRE(n.has_value());
  CHECK((vec_eq(*n, iv({0, 0, 1})) || vec_eq(*n, iv({0, 0, -1}))));

  // Rational rows give a primitive integer normal.
  auto m = hyperplane_normal(rm({{"1/2", "1/3"}}));
  REQUIRE(m.has_value());
  CHECK((vec_eq(*m, iv({2, -3})) || vec_eq(*m, iv({-2, 3}))));

  // Nullity 2 and nullity 0 both refuse.
  CHECK(!hyperplane_normal(rm({{"1", "0", "0"}})).has_value());
  CHECK(!hyperplane_normal(rm({{"1", "0"}, {"0", "1"}})).has_value());
}
