#include <doctest.h>

#include <cmath>

#include "treext/enumerate.hpp"
#include "treext/spectral.hpp"
#include "treext/tree.hpp"

using namespace treext;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("energy of paths and stars") {
  CHECK(energy(Tree::single_vertex()) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(energy(Tree::path(2)) == doctest::Approx(2.0).epsilon(1e-10));
  for (int n = 2; n <= 12; ++n)
    CHECK(energy(Tree::star(n)) == doctest::Approx(2.0 * std::sqrt(n - 1.0)).epsilon(1e-10));
  // path eigenvalues are 2 cos(k pi / (n+1))
  for (int n = 2; n <= 10; ++n) {
    double expected = 0;
    for (int k = 1; k <= n; ++k) expected += std::abs(2.0 * std::cos(k * M_PI / (n + 1)));
    CHECK(energy(Tree::path(n)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("lel of small trees from known laplacian spectra") {
  // L(P_2) has eigenvalues 0 and 2
  CHECK(lel(Tree::path(2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  // L(S_n) has eigenvalues 0, 1 (n-2 times), n
  for (int n = 3; n <= 10; ++n)
    CHECK(lel(Tree::star(n)) == doctest::Approx((n - 2) + std::sqrt(double(n))).epsilon(1e-10));
}

TEST_CASE("incidence energy equals lel on trees") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : all_trees(n))
      CHECK(std::abs(incidence_energy(t) - lel(t)) < 1e-8);
}

TEST_CASE("lel is half the subdivision energy") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : all_trees(n))
      CHECK(std::abs(lel(t) - 0.5 * energy(subdivision(t))) < 1e-8);
}

TEST_SUITE_END();
