#include "lur/rational.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using lur::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 6).num() == 1);
  CHECK(Rational(3, 6).den() == 2);
  CHECK(Rational(2, -4).den() == 2);  // denominator stays positive
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts num and num/den") {
  auto p = [](const char* s) { return Rational::parse(s); };
  CHECK(p("3/6") == Rational(1, 2));
  CHECK(p("-3/6") == Rational(-1, 2));
  CHECK(p("+7") == Rational(7));
  CHECK(p("0") == Rational(0));
  CHECK(p("44479/32768") == Rational(44479, 32768));
  // a value wider than any machine word
  auto big = p("12034552627604020308981441166197");
  REQUIRE(big.has_value());
  CHECK(big->str() == "12034552627604020308981441166197");
}

TEST_CASE("parse rejects malformed input") {
  auto bad = [](const char* s) { return !Rational::parse(s).has_value(); };
  CHECK(bad(""));
  CHECK(bad("1/0"));
  CHECK(bad("1/00"));
  CHECK(bad("1/-2"));
  CHECK(bad("1.5"));
  CHECK(bad("a"));
  CHECK(bad("+"));
  CHECK(bad("1/"));
  CHECK(bad("/2"));
  CHECK(bad("1 /2"));
  CHECK(bad("0x10"));
}

TEST_CASE("str round-trips through parse") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    Rational r(num(rng), den(rng));
    auto back = Rational::parse(r.str());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK(Rational(4, 2).str() == "2");  // integers print without a slash
  CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("arithmetic is exact field arithmetic") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  for (int i = 0; i < 100; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)),
        c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering is total and compatible with arithmetic") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(lur::min(Rational(3), Rational(-3)) == Rational(-3));
  CHECK(lur::max(Rational(3), Rational(-3)) == Rational(3));
  CHECK(lur::abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("pow2 covers negative exponents") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-10) == Rational(1, 1024));
  CHECK(Rational::pow2(-1) * Rational::pow2(1) == Rational(1));
}

TEST_CASE("bit_length measures the wider side") {
  CHECK(Rational(1) .bit_length() == 1);
  CHECK(Rational(255).bit_length() == 8);
  CHECK(Rational(256).bit_length() == 9);
  CHECK(Rational(1, 256).bit_length() == 9);
  CHECK(Rational(255, 256).bit_length() == 9);
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(-7, 3) << ' ' << Rational(4);
  CHECK(os.str() == "-7/3 4");
}
