#include <cmath>
#include <random>

#include "doctest.h"
#include "fluxring/errors.hpp"
#include "fluxring/geneig.hpp"

using namespace fluxring;

namespace {

GenEig2<double> random_pencil(std::mt19937_64& rng, double eps, double theta) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  GenEig2<double> p;
  const std::complex<double> off(u(rng), u(rng));
  p.h << u(rng), off, std::conj(off), u(rng);
  p.a = overlap_matrix(eps, theta);
  return p;
}

}  // namespace

TEST_SUITE("geneig") {
  TEST_CASE("identity overlap gives ordinary eigenvalues") {
    GenEig2<double> p;
    p.h << 0.0, 1.0, 1.0, 0.0;
    p.a = overlap_matrix(0.0, 0.0);
    const auto sol = gen_eig_2x2(p);
    CHECK(sol.values(0) == doctest::Approx(-1.0));
    CHECK(sol.values(1) == doctest::Approx(1.0));
  }

  TEST_CASE("reference block") {
    GenEig2<double> p;
    p.h << 15.0, 1.7, 1.7, 19.0;
    p.a = overlap_matrix(0.1, 0.0);
    const auto sol = gen_eig_2x2(p);
    CHECK(sol.values(0) == doctest::Approx(14.9899243694815758).epsilon(1e-14));
    CHECK(sol.values(1) == doctest::Approx(17.0 + 2.0 / std::sqrt(0.99)).epsilon(1e-14));
  }

  TEST_CASE("residual and A-orthonormality on random pencils") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ue(0.0, 0.95);
    std::uniform_real_distribution<double> ut(-3.14, 3.14);
    for (int i = 0; i < 1000; ++i) {
      const auto p = random_pencil(rng, ue(rng), ut(rng));
      const auto sol = gen_eig_2x2(p);
      CHECK(pencil_residual(p, sol) <= 1e-12 * detail::max_abs(p.h));
      const Matrix2c<double> g = sol.vectors.adjoint() * p.a * sol.vectors;
      CHECK(std::abs(g(0, 0) - 1.0) < 1e-12);
      CHECK(std::abs(g(1, 1) - 1.0) < 1e-12);
      CHECK(std::abs(g(0, 1)) < 1e-12);
      CHECK(sol.values(0) <= sol.values(1));
    }
  }

  TEST_CASE("theta changes phases, not eigenvalues") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ut(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
      const double theta = ut(rng);
      const std::complex<double> w = std::polar(1.0, theta);
      GenEig2<double> p0;
      p0.h << 15.0, 1.7, 1.7, 19.0;
      p0.a = overlap_matrix(0.1, 0.0);
      GenEig2<double> p1 = p0;
      p1.h(0, 1) *= w;
      p1.h(1, 0) *= std::conj(w);
      p1.a = overlap_matrix(0.1, theta);
      const auto s0 = gen_eig_2x2(p0);
      const auto s1 = gen_eig_2x2(p1);
      CHECK(s1.values(0) == doctest::Approx(s0.values(0)).epsilon(1e-14));
      CHECK(s1.values(1) == doctest::Approx(s0.values(1)).epsilon(1e-14));
      // First component over second carries exactly e^{i theta}.
      for (int k = 0; k < 2; ++k) {
        const std::complex<double> r0 = s0.vectors(0, k) / s0.vectors(1, k);
        const std::complex<double> r1 = s1.vectors(0, k) / s1.vectors(1, k);
        CHECK(std::abs(r1 - r0 * w) < 1e-12 * std::abs(r0));
      }
    }
  }

  TEST_CASE("errors") {
    GenEig2<double> p;
    p.h << 1.0, 0.0, 0.0, 2.0;
    p.a = overlap_matrix(1.0, 0.0);
    CHECK_THROWS_AS(gen_eig_2x2(p), SingularOverlapError);
    p.a = overlap_matrix(0.2, 0.0);
    p.h(0, 1) = {0.5, 0.0};
    CHECK_THROWS_AS(gen_eig_2x2(p), ValidationError);
  }
}
