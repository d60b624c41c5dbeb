#include <doctest.h>

#include <random>

#include "ndmap/errors.hpp"
#include "ndmap/spectrum.hpp"
#include "oracles.hpp"

using namespace ndmap;

TEST_CASE("neumann_eigenvalue evaluates pi^2 (l^2 + m^2)") {
  CHECK(neumann_eigenvalue({0, 0}) == 0.0);
  CHECK(neumann_eigenvalue({1, 0}) == doctest::Approx(9.8696044).epsilon(1e-9));
  CHECK(neumann_eigenvalue({1, 2}) == doctest::Approx(49.3480220).epsilon(1e-9));
  CHECK(neumann_eigenvalue({2, 1}) == neumann_eigenvalue({1, 2}));
}

TEST_CASE("count_d examples") {
  CHECK(count_d(-10, 1) == 0);
  CHECK(count_d(5, 1) == 1);
  CHECK(count_d(25, 1) == 4);
  // k scales the coefficient: 25 * 1 == 6.25 * 2^2.
  CHECK(count_d(6.25, 2) == 4);
  CHECK_THROWS_AS(count_d(0, 1), ResonanceError);
  CHECK_THROWS_AS(count_d(oracle::pi2, 1), ResonanceError);
}

TEST_CASE("multiplicity examples") {
  CHECK(multiplicity(0) == 1);
  CHECK(multiplicity(1) == 2);
  CHECK(multiplicity(2) == 1);
  CHECK(multiplicity(3) == 0);
  CHECK(multiplicity(5) == 2);
  CHECK(multiplicity(25) == 4);  // (0,5),(5,0),(3,4),(4,3)
  CHECK(multiplicity(125) == 4);
}

TEST_CASE("bound_delta examples") {
  CHECK(bound_delta(-10, 5, 1) == 1);
  CHECK(bound_delta(-10, 15, 1) == 3);
  CHECK(bound_delta(10, 10.5, 1) == 0);
  CHECK(bound_delta(3, 3, 1) == 0);
  CHECK_THROWS_AS(bound_delta(5, -10, 1), PreconditionError);
  CHECK_THROWS_AS(bound_delta(-10, 0, 1), ResonanceError);
  CHECK_THROWS_AS(bound_delta(oracle::pi2, 20, 1), ResonanceError);
}

TEST_CASE("is_resonant examples") {
  CHECK(is_resonant(0, 1, 1e-9));
  CHECK(is_resonant(oracle::pi2, 1, 1e-9));
  CHECK_FALSE(is_resonant(-10, 1, 1e-9));
  CHECK(is_resonant(5 * oracle::pi2, 1, 1e-9));
  CHECK_FALSE(is_resonant(5 * oracle::pi2 + 1e-6, 1, 1e-9));
  CHECK(is_resonant(5 * oracle::pi2 + 1e-6, 1, 1e-5));
  // a k^2 = pi^2 with k = 2.
  CHECK(is_resonant(oracle::pi2 / 4, 2, 1e-9));
  CHECK_THROWS_AS(is_resonant(1, 1, 0.0), PreconditionError);
  CHECK_THROWS_AS(is_resonant(1, -1, 1e-9), PreconditionError);
}

TEST_CASE("construct_even_multiplicity") {
  CHECK(construct_even_multiplicity(2) == 5);
  CHECK(construct_even_multiplicity(4) == 125);
  CHECK(construct_even_multiplicity(6) == 3125);
  for (int N : {2, 4, 6, 8}) {
    const auto n = construct_even_multiplicity(N);
    CHECK(oracle::representations(n) == N);
  }
  CHECK_THROWS_AS(construct_even_multiplicity(3), PreconditionError);
  CHECK_THROWS_AS(construct_even_multiplicity(0), PreconditionError);
  CHECK_THROWS_AS(construct_even_multiplicity(-2), PreconditionError);
}

TEST_CASE("multiplicity matches a brute-force double loop for n <= 10^4") {
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    REQUIRE(multiplicity(n) == oracle::representations(n));
  }
}

TEST_CASE("bound_delta equals d(b) - d(a) and the lattice oracle") {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> coef(-30.0, 400.0);
  std::uniform_real_distribution<double> wave(0.3, 2.5);
  int checked = 0;
  while (checked < 300) {
    double a = coef(rng);
    double b = coef(rng);
    const double k = wave(rng);
    if (a > b) std::swap(a, b);
    if (is_resonant(a, k) || is_resonant(b, k)) continue;
    const auto direct = bound_delta(a, b, k);
    CHECK(direct == count_d(b, k) - count_d(a, k));
    CHECK(direct == oracle::lattice_window(a * k * k, b * k * k));
    CHECK(direct >= 0);
    ++checked;
  }
}

TEST_CASE("count_d is nondecreasing in a") {
  std::int64_t previous = 0;
  for (double a = -20.0; a <= 500.0; a += 0.37) {
    if (is_resonant(a, 1.0)) continue;
    const auto d = count_d(a, 1.0);
    CHECK(d >= previous);
    previous = d;
  }
  CHECK(previous > 40);
}

TEST_CASE("modes_in_window lists the open window in (l, m) order") {
  const auto modes = modes_in_window(5.0, 20.0, 5);
  REQUIRE(modes.size() == 3);
  CHECK(modes[0] == ModeIndex{0, 1});
  CHECK(modes[1] == ModeIndex{1, 0});
  CHECK(modes[2] == ModeIndex{1, 1});
}
