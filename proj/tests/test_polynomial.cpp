#include <doctest.h>

#include "treext/polynomial.hpp"

using namespace treext;

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("arithmetic and canonical form") {
  IntPolynomial one_plus_x{1, 1};
  CHECK((one_plus_x * one_plus_x) == IntPolynomial{1, 2, 1});
  CHECK((one_plus_x - one_plus_x).is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{3, 0, 0}.degree() == 0);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial::x() * IntPolynomial::x() == IntPolynomial{0, 0, 1});
}

TEST_CASE("evaluation") {
  IntPolynomial p{1, 3, 1};  // 1 + 3x + x^2
  CHECK(p.eval(BigInt(1)) == 5);
  CHECK(p.eval(BigInt(2)) == 11);
  CHECK(p.eval(Ratio(1, 2)) == Ratio(11, 4));
  CHECK(p.substitute_neg_x() == IntPolynomial{1, -3, 1});
}

TEST_CASE("exact division") {
  IntPolynomial a{1, 2, 1};  // (1+x)^2
  IntPolynomial b{1, 1};
  CHECK(IntPolynomial::exact_div(a, b) == b);
  CHECK_THROWS_AS(IntPolynomial::exact_div(IntPolynomial{1, 1, 1}, b), Error);
  CHECK_THROWS_AS(IntPolynomial::exact_div(a, IntPolynomial{}), Error);
  // exactness over large coefficients
  IntPolynomial big = IntPolynomial{7} * IntPolynomial{0, 1, 5, 9} * IntPolynomial{3, 11};
  CHECK(IntPolynomial::exact_div(big, IntPolynomial{3, 11}) ==
        IntPolynomial{7} * IntPolynomial{0, 1, 5, 9});
}

TEST_CASE("wire form") {
  IntPolynomial p{0, 2, -1};
  CHECK(p.coeff_strings() == std::vector<std::string>{"0", "2", "-1"});
  CHECK(p.to_string() == "-x^2 + 2x");
}

TEST_SUITE_END();
