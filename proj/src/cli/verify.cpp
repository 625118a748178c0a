#include "fluxring/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>

#include "fluxring/errors.hpp"
#include "fluxring/geneig.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/oracle/block_scan.hpp"
#include "fluxring/oracle/hermitian.hpp"
#include "fluxring/oracle/quadrature.hpp"
#include "fluxring/ring.hpp"

namespace fluxring::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string tag(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  void add(std::string name, double deviation, double tolerance, std::string detail = {}) {
    VerifyCheck c;
    c.name = std::move(name);
    c.deviation = deviation;
    c.tolerance = options_.tolerance.value_or(tolerance);
    c.passed = std::isfinite(deviation) && deviation <= c.tolerance;
    c.detail = std::move(detail);
    checks_.push_back(std::move(c));
  }

  /// Runs `body`; an exception becomes a failed check.
  template <typename F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, kInf, 0.0, e.what());
    }
  }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  const VerifyOptions& options_;
  std::vector<VerifyCheck> checks_;
};

void eigensolver_checks(Suite& suite) {
  suite.guarded("eigensolver/pauli_x", [&] {
    Eigen::MatrixXcd h(2, 2);
    h << 0.0, 1.0, 1.0, 0.0;
    const auto eigs = oracle::hermitian_eigs(h);
    suite.add("eigensolver/pauli_x", std::max(std::abs(eigs.values(0) + 1.0), std::abs(eigs.values(1) - 1.0)), 1e-14);
  });
  suite.guarded("eigensolver/random_n40", [&] {
    std::mt19937_64 rng(40);
    std::normal_distribution<double> normal;
    const int n = 40;
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = {normal(rng), normal(rng)};
    const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    const auto eigs = oracle::hermitian_eigs(h, true);
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff() * n);
    const double trace_dev = std::abs(h.trace().real() - eigs.values.sum()) / scale;
    suite.add("eigensolver/random_n40_trace", trace_dev, 1e-10);
    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
      residual = std::max(residual, (h * eigs.vectors.col(k) - eigs.values(k) * eigs.vectors.col(k)).norm());
    }
    suite.add("eigensolver/random_n40_residual", residual / h.norm(), 1e-10);
  });
}

void ring_checks(Suite& suite, int n_grid) {
  const double scale = std::pow(static_cast<double>(oracle::kDefaultRingGrid) / n_grid, 2);
  suite.guarded("ring_fd/dense_vs_symbol", [&] {
    oracle::RingFdOptions opts;
    opts.solver = oracle::FdSolver::Dense;
    const auto report = oracle::ring_fd_spectrum(4, 1.2, 64, opts);
    const auto symbol = oracle::ring_fd_symbol_levels(4, 1.2, 64, opts.levels);
    const auto check = oracle::make_report("dense_vs_symbol", report.computed, symbol);
    suite.add("ring_fd/dense_vs_symbol_n64", check.max_abs_deviation, 1e-8);
  });
  suite.guarded("ring_fd/banded_vs_symbol", [&] {
    const auto report = oracle::ring_fd_spectrum(4, 1.2, n_grid);
    const auto symbol = oracle::ring_fd_symbol_levels(4, 1.2, n_grid, 9);
    const auto check = oracle::make_report("banded_vs_symbol", report.computed, symbol);
    suite.add("ring_fd/banded_vs_symbol", check.max_abs_deviation, 1e-8 * std::max(1.0, 1.0 / scale));
  });
  for (int ell : {0, 4}) {
    for (double sl : {0.0, 0.3, 1.2}) {
      if (ell == 0 && sl != 0.0) continue;
      const std::string name = "ring_fd/ell" + std::to_string(ell) + "_sigma_ell" + tag(sl);
      suite.guarded(name, [&] {
        const auto report = oracle::ring_fd_spectrum(ell, sl, n_grid);
        suite.add(name, report.max_abs_deviation, 1e-3 * scale);
      });
    }
  }
  suite.guarded("ring_fd/convergence", [&] {
    const auto coarse = oracle::ring_fd_spectrum(4, 1.2, n_grid);
    const auto fine = oracle::ring_fd_spectrum(4, 1.2, 4 * n_grid);
    suite.add("ring_fd/convergence", fine.max_abs_deviation, coarse.max_abs_deviation / 3.5,
              "deviation at 4N against deviation at N over 3.5");
  });
}

void radial_checks(Suite& suite, int n_grid) {
  const double scale = std::pow(static_cast<double>(oracle::kDefaultRadialGrid) / n_grid, 2);
  for (int ell : {4, 6}) {
    for (double sl : {0.0, 1.0}) {
      for (int m = -2; m <= 2; ++m) {
        const std::string name = "radial_fd/ell" + std::to_string(ell) + "_sigma_ell" + tag(sl) + "_m" +
                                 std::to_string(m);
        suite.guarded(name, [&] {
          const double r_max = oracle::default_radial_extent(mu(ell, sl, m));
          const auto report = oracle::radial_fd_spectrum(ell, sl, m, r_max, n_grid, 4);
          suite.add(name, report.max_abs_deviation, 1e-3 * scale);
          double spacing = 0.0;
          for (std::size_t k = 1; k < report.computed.size(); ++k) {
            spacing = std::max(spacing, std::abs(report.computed[k] - report.computed[k - 1] - 2.0));
          }
          suite.add(name + "_spacing", spacing, 2e-3 * scale);
        });
      }
    }
  }
}

void quadrature_checks(Suite& suite) {
  suite.guarded("quadrature/norms", [&] {
    double worst = 0.0;
    double worst_overlap = 0.0;
    for (int ell : {1, 4, 6}) {
      for (double sl : {0.0, 0.5 * ell}) {
        for (int m = -6; m <= 6; ++m) {
          for (int n = 0; n <= 3; ++n) {
            const RadialFunction f = radial_wavefunction(ell, sl, n, m);
            worst = std::max(worst, std::abs(oracle::quadrature_norm(f) - 1.0));
          }
          const RadialFunction f0 = radial_wavefunction(ell, sl, 0, m);
          const RadialFunction f1 = radial_wavefunction(ell, sl, 1, m);
          const double r_max = oracle::default_quadrature_extent(f1);
          worst_overlap = std::max(worst_overlap, std::abs(oracle::radial_overlap(f0, f1, r_max)));
        }
      }
    }
    suite.add("quadrature/norms", worst, 1e-8);
    suite.add("quadrature/orthogonality", worst_overlap, 1e-8);
  });
}

void pencil_checks(Suite& suite) {
  suite.guarded("geneig/reference_block", [&] {
    GenEig2<double> p;
    p.h << 15.0, 1.7, 1.7, 19.0;
    p.a = overlap_matrix(0.1, 0.0);
    const auto sol = gen_eig_2x2(p);
    const double expected = 17.0 - 2.0 / std::sqrt(0.99);
    suite.add("geneig/reference_block", std::abs(sol.values(0) - expected) / expected, 1e-12);
    suite.add("geneig/residual", pencil_residual(p, sol) / detail::max_abs(p.h), 1e-12);
  });

  struct Point {
    FluxCaseKind c;
    GeometryKind g;
    int ell;
    double sl;
    double eps;
  };
  const Point points[] = {
      {FluxCaseKind::CaseI, GeometryKind::Ring, 4, 1.0, 0.1},
      {FluxCaseKind::CaseII, GeometryKind::Ring, 4, 1.0, 0.1},
      {FluxCaseKind::CaseI, GeometryKind::Harmonic, 4, 1.0, 0.1},
      {FluxCaseKind::CaseII, GeometryKind::Harmonic, 4, 1.0, 0.1},
      {FluxCaseKind::CaseI, GeometryKind::Ring, 16, 8.0, 0.1},
      {FluxCaseKind::CaseII, GeometryKind::Ring, 16, 8.0, 0.03},
      {FluxCaseKind::CaseI, GeometryKind::Harmonic, 6, 2.4, 0.1},
  };
  for (const Point& pt : points) {
    const std::string name = std::string("block_scan/") + to_string(pt.c) + "_" + to_string(pt.g) + "_ell" +
                             std::to_string(pt.ell) + "_sigma_ell" + tag(pt.sl);
    suite.guarded(name, [&] {
      const int m_max = std::abs(ground_m(pt.sl)) + 8;
      const auto scan = oracle::superposition_block_scan(pt.c, pt.g, pt.ell, pt.sl, pt.eps, 0.3, m_max);
      const double dev = scan.at_check ? scan.report.max_rel_deviation : kInf;
      suite.add(name, dev, oracle::kBlockScanTolerance, "m* = " + std::to_string(scan.m_star));
    });
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.ring_grid < oracle::kMinRingGrid) throw UsageError("--ring-grid must be at least 64");
  if (options.radial_grid < oracle::kMinRadialGrid) throw UsageError("--radial-grid must be at least 2000");
  if (options.tolerance && !(*options.tolerance >= 0.0)) throw UsageError("--tolerance must be >= 0");

  Suite suite(options);
  eigensolver_checks(suite);
  ring_checks(suite, options.ring_grid);
  radial_checks(suite, options.radial_grid);
  quadrature_checks(suite);
  pencil_checks(suite);

  VerifyReport report;
  report.checks = suite.take();
  report.ring_grid = options.ring_grid;
  report.radial_grid = options.radial_grid;
  report.passed = true;
  for (const auto& c : report.checks) report.passed = report.passed && c.passed;
  return report;
}

}  // namespace fluxring::cli
