#include <doctest.h>

#include "qlogic/rational.hpp"
#include "test_helpers.hpp"

using namespace qlogic;

TEST_CASE("field arithmetic on known values") {
  const GaussianRational half_plus{Rational(1, 2), Rational(1, 2)};
  const GaussianRational half_minus{Rational(1, 2), Rational(-1, 2)};
  CHECK(half_plus * half_minus == GaussianRational(Rational(1, 2)));

  const GaussianRational x{Rational(3, 7), Rational(-2, 5)};
  CHECK(x + GaussianRational::zero() == x);

  // (1+i)/(1-i) = i
  const GaussianRational num(1, 1);
  const GaussianRational den(1, -1);
  CHECK(num / den == GaussianRational::i());
  // independent route: multiply by the conjugate and divide by |den|^2
  const GaussianRational oracle = {(num * den.conj()).re / den.norm(),
                                   (num * den.conj()).im / den.norm()};
  CHECK(num / den == oracle);
}

TEST_CASE("division by zero is an arithmetic error") {
  CHECK_THROWS_AS(GaussianRational::one() / GaussianRational::zero(), ArithmeticError);
}

TEST_CASE("field axioms on random values") {
  testing::Gen gen(7);
  for (int k = 0; k < 200; ++k) {
    const GaussianRational a = gen.scalar();
    const GaussianRational b = gen.nonzero_scalar();
    CHECK((a / b) * b == a);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational::zero());
  }
}

TEST_CASE("scalar text round-trips on known forms") {
  for (const char* text : {"1", "-1", "0", "1/2", "-1/2+1/2i", "3i", "-2/7i", "1+i",
                           "1-i", "i", "-i", "12345678901234567890/7i"}) {
    const GaussianRational z = parse_scalar(text);
    CHECK(parse_scalar(format_scalar(z)) == z);
  }
  CHECK(parse_scalar("1/2 + 1/3i") == GaussianRational{Rational(1, 2), Rational(1, 3)});
  CHECK(format_scalar(parse_scalar("-1/2")) == "-1/2");
  CHECK(format_scalar(parse_scalar("0+0i")) == "0");
}

TEST_CASE("malformed scalars are rejected") {
  for (const char* text : {"", "1/0", "1+2", "i+i", "1x", "1/2i+3i", "--1"})
    CHECK_THROWS_AS(parse_scalar(text), ParseError);
}

TEST_CASE("print/parse round-trip on random values") {
  testing::Gen gen(11);
  for (int k = 0; k < 200; ++k) {
    const GaussianRational z = gen.scalar();
    const std::string text = format_scalar(z);
    CHECK(parse_scalar(text) == z);
    CHECK(format_scalar(parse_scalar(text)) == text);
  }
}
