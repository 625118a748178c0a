#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fluxring/errors.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/superposition.hpp"

using namespace fluxring;

TEST_SUITE("superposition") {
  TEST_CASE("ring case i reference") {
    const auto r = superpose_ring(FluxCaseKind::CaseI, 4, 1.0, 0.1, 0.0);
    CHECK(r.m_check == -1);
    CHECK(r.e_zero == 15.0);
    CHECK(r.delta_e == doctest::Approx(-0.0100756305184241510).epsilon(1e-14));
    CHECK(r.e_plus == doctest::Approx(14.9899243694815758).epsilon(1e-14));
    CHECK(r.mixing_ratio == doctest::Approx(0.00251257867600905310).epsilon(1e-14));
    CHECK(r.gap == 1.0);
    CHECK(r.feasible);
  }

  TEST_CASE("ring case ii reference") {
    const auto r = superpose_ring(FluxCaseKind::CaseII, 4, 1.0, 0.1, 0.0);
    CHECK(r.delta_e == doctest::Approx(-0.154065922853801613).epsilon(1e-14));
    CHECK(r.e_plus == doctest::Approx(14.8459340771461984).epsilon(1e-14));
    CHECK(r.xi(1).real() == doctest::Approx(0.25 - std::sqrt(0.0725)).epsilon(1e-13));
    CHECK(r.zeta(1).real() == doctest::Approx(0.25 + std::sqrt(0.0725)).epsilon(1e-13));
  }

  TEST_CASE("harmonic case i reference") {
    const auto r = superpose_harmonic(FluxCaseKind::CaseI, 4, 1.0, 0.1, 0.0);
    CHECK(r.delta_e == doctest::Approx(-0.00130075830667986463).epsilon(1e-14));
    const auto r0 = superpose_harmonic(FluxCaseKind::CaseI, 4, 1.0, 0.0, 0.0);
    CHECK(r0.delta_e == 0.0);
    CHECK(r0.e_plus == doctest::Approx(std::sqrt(15.0) + 1.0).epsilon(1e-15));
  }

  TEST_CASE("harmonic and ring reductions differ by 2 mu") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ue(0.0, 0.5);
    for (int i = 0; i < 200; ++i) {
      const double eps = ue(rng);
      const int ell = 2 + static_cast<int>(rng() % 10);
      const double sl = std::uniform_real_distribution<double>(0.6, ell - 0.6)(rng);
      if (std::abs(sl - std::floor(sl) - 0.5) < 1e-6) continue;
      const auto ring = superpose_ring(FluxCaseKind::CaseI, ell, sl, eps, 0.0);
      const auto trap = superpose_harmonic(FluxCaseKind::CaseI, ell, sl, eps, 0.0);
      CHECK(std::abs(trap.delta_e) * mu(ell, sl, ring.m_check) ==
            doctest::Approx(std::abs(ring.delta_e) / 2.0).epsilon(1e-12));
    }
  }

  TEST_CASE("decoupled limit") {
    for (auto c : {FluxCaseKind::CaseI, FluxCaseKind::CaseII}) {
      for (auto g : {GeometryKind::Ring, GeometryKind::Harmonic}) {
        const auto r = superpose(c, g, 6, 2.0, 0.0, 0.7);
        CHECK(r.delta_e == 0.0);
        CHECK(r.mixing_ratio == 0.0);
        CHECK(r.e_plus == doctest::Approx(r.e_zero).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("energies independent of theta") {
    for (auto c : {FluxCaseKind::CaseI, FluxCaseKind::CaseII}) {
      const auto a = superpose(c, GeometryKind::Ring, 8, 3.0, 0.2, 0.0);
      const auto b = superpose(c, GeometryKind::Ring, 8, 3.0, 0.2, 2.1);
      CHECK(a.delta_e == b.delta_e);
      CHECK(a.e_plus == b.e_plus);
      CHECK(std::abs(b.xi(0) / a.xi(0) - std::polar(1.0, 2.1)) < 1e-14);
    }
  }

  TEST_CASE("case i energy decreases with eps") {
    for (auto g : {GeometryKind::Ring, GeometryKind::Harmonic}) {
      double prev = 1e300;
      for (int k = 0; k <= 90; ++k) {
        const double e = superpose(FluxCaseKind::CaseI, g, 5, 2.0, k * 0.01, 0.0).e_plus;
        CHECK(e < prev);
        prev = e;
      }
    }
  }

  TEST_CASE("mixing ratios") {
    const auto r = superpose_ring(FluxCaseKind::CaseI, 4, 1.0, 0.1, 0.3);
    const double from_xi = std::norm(r.xi(1) / r.xi(0));
    const double from_zeta = std::norm(r.zeta(0) / r.zeta(1));
    CHECK(from_xi == doctest::Approx(from_zeta).epsilon(1e-14));
    CHECK(from_xi == doctest::Approx(r.mixing_ratio).epsilon(1e-14));
    CHECK(std::abs(r.mixing_ratio / (0.01 / 4.0) - 1.0) <= 0.01);
  }

  TEST_CASE("normalized vectors") {
    const auto r = superpose_ring(FluxCaseKind::CaseI, 4, 1.0, 0.3, 0.4);
    const Matrix2c<double> a = overlap_matrix(0.3, 0.4);
    CHECK(std::abs((r.zeta_normalized.adjoint() * a * r.zeta_normalized)(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs((r.xi_normalized.adjoint() * a * r.xi_normalized)(0, 0) - 1.0) < 1e-14);
    const auto s = superpose_ring(FluxCaseKind::CaseII, 4, 1.0, 0.3, 0.4);
    CHECK(std::abs(s.zeta_normalized.norm() - 1.0) < 1e-14);
  }

  TEST_CASE("small eps laws") {
    const auto a = small_eps_delta_e(FluxCaseKind::CaseI, GeometryKind::Ring, 4, 1.0, 0.1);
    CHECK(a.delta_e == doctest::Approx(-0.01));
    CHECK(a.prefactor == doctest::Approx(-1.0));
    CHECK_FALSE(a.outside_validity);
    const auto b = small_eps_delta_e(FluxCaseKind::CaseII, GeometryKind::Ring, 4, 1.0, 0.05);
    CHECK(b.delta_e == doctest::Approx(-0.04));
    CHECK(superpose_ring(FluxCaseKind::CaseII, 4, 1.0, 0.05, 0.0).delta_e ==
          doctest::Approx(-0.0396078054371139320).epsilon(1e-14));
    const auto c = small_eps_delta_e(FluxCaseKind::CaseI, GeometryKind::Harmonic, 4, 1.0, 0.1);
    CHECK(c.prefactor == doctest::Approx(-1.0 / (2.0 * std::sqrt(15.0))));
    CHECK(small_eps_delta_e(FluxCaseKind::CaseI, GeometryKind::Ring, 4, 1.0, 0.4).outside_validity);
    CHECK(small_eps_delta_e(FluxCaseKind::CaseI, GeometryKind::Ring, 4, 1.0, 0.0).delta_e == 0.0);
    CHECK_THROWS_AS(small_eps_delta_e(FluxCaseKind::CaseII, GeometryKind::Ring, 4, 0.0, 0.1), DomainError);
  }

  TEST_CASE("feasibility boundary") {
    const double b = feasibility_boundary(FluxCaseKind::CaseI, GeometryKind::Ring, 16, 8.0);
    CHECK(b == doctest::Approx(1.39335326665141592).epsilon(1e-12));
    CHECK(epsilon_param(b, 0.5) == doctest::Approx(0.124273019704506956).epsilon(1e-12));
  }

  TEST_CASE("feasibility sweep") {
    const std::vector<double> sl = {8.0};
    std::vector<double> da;
    for (int k = 0; k < 351; ++k) da.push_back(0.5 + 3.5 * k / 350.0);
    const auto rows = feasibility_sweep(FluxCaseKind::CaseI, GeometryKind::Ring, 16, sl, da);
    CHECK(rows.size() == 351u);
    for (const auto& r : rows) {
      CHECK(r.gap == 1.0);
      CHECK(r.feasible == (r.delta_alpha > 1.39335326665141592));
    }
    const std::vector<double> bad = {2.5};
    CHECK_THROWS_AS(feasibility_sweep(FluxCaseKind::CaseI, GeometryKind::Ring, 16, bad, da), UsageError);
    const std::vector<double> big = {16.0};
    CHECK_THROWS_AS(feasibility_sweep(FluxCaseKind::CaseI, GeometryKind::Ring, 16, big, da), DomainError);
  }

  TEST_CASE("errors and warnings") {
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseI, 4, 1.5, 0.1, 0.0), DegeneracyError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::Neither, 4, 1.0, 0.1, 0.0), UnsupportedCaseError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseI, 4, 1.0, 1.0, 0.0), SingularOverlapError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseI, 4, 1.0, -0.1, 0.0), DomainError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseII, 4, -1.0, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseI, 4, 5.0, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(superpose_ring(FluxCaseKind::CaseI, 0, 0.0, 0.1, 0.0), DomainError);
    const auto r = superpose_ring(FluxCaseKind::CaseII, 4, 0.0, 0.1, 0.0);
    CHECK(r.warnings.size() == 1u);
    CHECK(r.delta_e == 0.0);
  }
}
