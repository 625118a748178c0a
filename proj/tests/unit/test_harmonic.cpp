#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fluxring/errors.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/special.hpp"

using namespace fluxring;

TEST_SUITE("harmonic") {
  TEST_CASE("log gamma") {
    const double ref[][2] = {{0.5, 0.572364942924700087},  {1.5, -0.120782237635245222},
                             {2.5, 0.284682870472919160},  {3.7, 1.42807232666538792},
                             {10.25, 13.3680236714760463}, {50.5, 146.519255490720627},
                             {123.456, 469.605547129929469}, {200.0, 857.933669825857437}};
    for (const auto& r : ref) CHECK(log_gamma(r[0]) == doctest::Approx(r[1]).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  }

  TEST_CASE("generalized Laguerre") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.0, 8.0);
    std::uniform_real_distribution<double> ux(0.0, 20.0);
    for (int i = 0; i < 200; ++i) {
      const double a = ua(rng);
      const double x = ux(rng);
      CHECK(laguerre_gen(0, a, x) == 1.0);
      CHECK(laguerre_gen(1, a, x) == doctest::Approx(1.0 + a - x));
      const double l2 = 0.5 * (x * x - 2.0 * (a + 2.0) * x + (a + 1.0) * (a + 2.0));
      CHECK(laguerre_gen(2, a, x) == doctest::Approx(l2).epsilon(1e-12));
    }
    CHECK_THROWS_AS(laguerre_gen(-1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(laguerre_gen(2, -1.5, 1.0), DomainError);
  }

  TEST_CASE("mu and energies") {
    CHECK(mu(4, 1.0, -1) == doctest::Approx(std::sqrt(15.0)));
    CHECK(harmonic_energy(4, 0.0, 0, 0) == 5.0);
    CHECK(harmonic_energy(4, 1.0, 0, -1) == doctest::Approx(1.0 + std::sqrt(15.0)));
    CHECK_THROWS_AS(mu(1, 3.0, -1), DomainError);
    CHECK_THROWS_AS(harmonic_energy(4, 0.0, -1, 0), DomainError);
  }

  TEST_CASE("gap") {
    CHECK(harmonic_gap(4, 0.0) == doctest::Approx(0.123105625617660550).epsilon(1e-14));
    CHECK(harmonic_gap(10, 0.0) == doctest::Approx(0.0498756211208902702).epsilon(1e-14));
    double prev = 1e300;
    for (int ell = 1; ell <= 20; ++ell) {
      const double g = harmonic_gap(ell, 0.0);
      CHECK(std::abs(g - (std::sqrt(ell * ell + 1.0) - ell)) <= 1e-12);
      CHECK(g < prev);
      prev = g;
    }
  }

  TEST_CASE("ground state matches brute force over n and m") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
      const int ell = 1 + static_cast<int>(rng() % 8);
      std::uniform_real_distribution<double> u(-ell, ell);
      const double s = u(rng);
      if (std::abs(s - std::floor(s) - 0.5) < 1e-9) continue;
      int bn = 0;
      int bm = 0;
      double best = 1e300;
      for (int n = 0; n <= 5; ++n) {
        for (int m = -20; m <= 20; ++m) {
          const double e = harmonic_energy(ell, s, n, m);
          if (e < best) {
            best = e;
            bn = n;
            bm = m;
          }
        }
      }
      const auto g = ground_quantum_numbers(s);
      CHECK(g.n == bn);
      CHECK(g.m == bm);
    }
  }

  TEST_CASE("radial function shape") {
    const RadialFunction f = radial_wavefunction(4, 0.0, 0, 0);
    CHECK(f.mu() == 4.0);
    CHECK(f.ground_peak() == doctest::Approx(std::sqrt(8.0)));
    const double p = f.ground_peak();
    CHECK(f(p) > f(p - 1e-3));
    CHECK(f(p) > f(p + 1e-3));
    for (int n = 0; n <= 3; ++n) CHECK(radial_wavefunction(4, 1.0, n, -1)(1e-3) > 0.0);
    CHECK(radial_wavefunction(0, 0.0, 0, 0)(0.0) > 0.0);
    CHECK_THROWS_AS(f(-1.0), DomainError);
    CHECK_THROWS_AS(RadialFunction(1000, 0, 1.0), RangeError);
  }

  TEST_CASE("spectrum sweep layout") {
    const std::vector<double> grid = {-1.0, 0.0, 1.0};
    const auto rows = harmonic_spectrum_sweep(4, grid, 2, 3);
    CHECK(rows.size() == 3u * 3u * 7u);
    double lowest_at_zero = 1e300;
    for (const auto& r : rows) {
      if (r.sigma_ell == 0.0) lowest_at_zero = std::min(lowest_at_zero, r.energy);
    }
    CHECK(lowest_at_zero == 5.0);
    CHECK_THROWS_AS(harmonic_spectrum_sweep(4, grid, -1, 3), UsageError);
    CHECK_THROWS_AS(harmonic_spectrum_sweep(4, grid, 0, 2), UsageError);
  }

  TEST_CASE("radial profile") {
    const auto prof = radial_profile(radial_wavefunction(4, 0.0, 0, 0), 10.0, 11);
    CHECK(prof.size() == 11u);
    CHECK(prof.back().r == 10.0);
    CHECK(prof.front().f == 0.0);
    CHECK_THROWS_AS(radial_profile(radial_wavefunction(4, 0.0, 0, 0), 10.0, 1), UsageError);
  }
}
