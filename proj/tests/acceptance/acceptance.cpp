// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fluxring/cli/cli.hpp"
#include "fluxring/cli/ranges.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/oracle/block_scan.hpp"
#include "fluxring/oracle/quadrature.hpp"
#include "fluxring/oracle/radial_fd.hpp"
#include "fluxring/oracle/ring_fd.hpp"
#include "fluxring/ring.hpp"
#include "fluxring/superposition.hpp"

using namespace fluxring;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome ring_gap_law() {
  Outcome o;
  double worst_zero = 0.0;
  double worst_one = 0.0;
  for (int ell : {3, 4, 6, 16}) {
    for (double sl : {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}) worst_zero = std::max(worst_zero, std::abs(ring_gap(ell, sl)));
    for (double sl : {-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
      const double g = ring_gap(ell, sl);
      worst_one = std::max(worst_one, std::abs(g - 1.0));
      if (g != 1.0) o.passed = false;
    }
  }
  if (worst_zero > 1e-12) o.passed = false;
  o.detail = "max|gap| at half-integers " + fmt("%.3e", worst_zero) + ", max|gap-1| at integers " + fmt("%.3e", worst_one);
  return o;
}

Outcome staircase() {
  Outcome o;
  const int ell = 6;
  const std::vector<double> grid = cli::parse_grid("-6:6:1201");
  int law_mismatch = 0;
  int brute_mismatch = 0;
  for (double sl : grid) {
    const int m = ground_m(sl);
    if (m != -static_cast<int>(std::floor(sl + 0.5))) ++law_mismatch;
    int best = -50;
    for (int k = -49; k <= 50; ++k) {
      if (ring_energy(ell, sl, k) < ring_energy(ell, sl, best)) best = k;
    }
    if (ring_energy(ell, sl, best) != ring_energy(ell, sl, m)) ++brute_mismatch;
  }
  o.passed = law_mismatch == 0 && brute_mismatch == 0;
  o.detail = std::to_string(grid.size()) + " points, law mismatches " + std::to_string(law_mismatch) +
             ", brute-force mismatches " + std::to_string(brute_mismatch);
  return o;
}

Outcome ring_fd() {
  Outcome o;
  double worst_coarse = 0.0;
  double worst_ratio = 1e300;
  int cases = 0;
  for (int ell : {0, 4}) {
    for (double sl : {0.0, 0.3, 1.2}) {
      if (ell == 0 && sl != 0.0) continue;  // sigma ell = sigma * ell vanishes at ell = 0
      const auto coarse = oracle::ring_fd_spectrum(ell, sl, 1024);
      const auto fine = oracle::ring_fd_spectrum(ell, sl, 4096);
      worst_coarse = std::max(worst_coarse, coarse.max_abs_deviation);
      worst_ratio = std::min(worst_ratio, coarse.max_abs_deviation / fine.max_abs_deviation);
      ++cases;
    }
  }
  o.passed = worst_coarse <= 1e-3 && worst_ratio >= 3.5;
  o.detail = std::to_string(cases) + " cases, max dev N=1024 " + fmt("%.3e", worst_coarse) +
             ", min ratio 1024/4096 " + fmt("%.1f", worst_ratio);
  return o;
}

Outcome harmonic_fd() {
  Outcome o;
  double worst_level = 0.0;
  double worst_norm = 0.0;
  for (int ell : {4, 6}) {
    for (double sl : {0.0, 1.0}) {
      for (int m = -2; m <= 2; ++m) {
        worst_level = std::max(worst_level, oracle::radial_fd_spectrum(ell, sl, m, 4).max_abs_deviation);
        for (int n = 0; n <= 3; ++n) {
          worst_norm = std::max(worst_norm, std::abs(oracle::quadrature_norm(radial_wavefunction(ell, sl, n, m)) - 1.0));
        }
      }
    }
  }
  o.passed = worst_level <= 1e-3 && worst_norm <= 1e-8;
  o.detail = "max level dev " + fmt("%.3e", worst_level) + ", max |norm-1| " + fmt("%.3e", worst_norm);
  return o;
}

Outcome harmonic_gap_law() {
  Outcome o;
  double worst = 0.0;
  double previous = 1e300;
  for (int ell = 1; ell <= 20; ++ell) {
    const double g = harmonic_gap(ell, 0.0);
    worst = std::max(worst, std::abs(g - (std::sqrt(ell * ell + 1.0) - ell)));
    if (!(g < previous)) o.passed = false;
    previous = g;
  }
  if (worst > 1e-12) o.passed = false;
  o.detail = "max dev " + fmt("%.3e", worst) + (o.passed ? ", strictly decreasing" : "");
  return o;
}

Outcome energy_reduction() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  int points = 0;
  int positive = 0;
  int pencil_bad = 0;
  int scan_checked = 0;
  int scan_bad = 0;
  int scan_excluded = 0;
  int excluded_agree = 0;
  double worst_pencil = 0.0;
  while (points < 10000) {
    const int ell = 1 + static_cast<int>(rng() % 20);
    double sl;
    if (rng() % 3 == 0) {
      sl = static_cast<double>(rng() % static_cast<unsigned>(ell));
    } else {
      sl = std::uniform_real_distribution<double>(0.0, ell)(rng);
      if (std::abs(sl - std::floor(sl) - 0.5) < 1e-3) continue;
    }
    const double eps = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    const double theta = std::uniform_real_distribution<double>(-3.14, 3.14)(rng);
    const auto c = (rng() & 1) ? FluxCaseKind::CaseI : FluxCaseKind::CaseII;
    const auto g = (rng() & 1) ? GeometryKind::Ring : GeometryKind::Harmonic;
    ++points;

    const auto r = superpose(c, g, ell, sl, eps, theta);
    if (r.delta_e > 0.0) ++positive;
    const auto pencil = gen_eig_2x2(oracle::mode_block(c, g, ell, sl, eps, theta, r.m_check));
    const double rel = std::abs(pencil.values(0) - r.e_plus) / std::max(1.0, std::abs(r.e_plus));
    worst_pencil = std::max(worst_pencil, rel);
    if (rel > 1e-12) ++pencil_bad;

    const auto scan = oracle::superposition_block_scan(c, g, ell, sl, eps, theta, std::abs(r.m_check) + ell + 6);
    if (r.feasible && r.m_check != 0) {
      ++scan_checked;
      if (!scan.consistent) ++scan_bad;
    } else {
      ++scan_excluded;
      if (scan.consistent) ++excluded_agree;
    }
  }
  o.passed = positive == 0 && pencil_bad == 0 && scan_bad == 0;
  o.detail = std::to_string(points) + " points, dE>0: " + std::to_string(positive) + ", pencil max rel " +
             fmt("%.2e", worst_pencil) + ", block scan " + std::to_string(scan_checked - scan_bad) + "/" +
             std::to_string(scan_checked) + " feasible points at +-m_check (" + std::to_string(scan_excluded) +
             " infeasible or m_check=0 points not asserted, " + std::to_string(excluded_agree) + " of them agree)";
  return o;
}

Outcome small_eps() {
  Outcome o;
  double worst = 0.0;  // max |exact - approx| / (eps^4 |prefactor|)
  int points = 0;
  for (auto c : {FluxCaseKind::CaseI, FluxCaseKind::CaseII}) {
    for (auto g : {GeometryKind::Ring, GeometryKind::Harmonic}) {
      for (int ell : {2, 4, 8, 16}) {
        std::vector<double> sls;
        if (c == FluxCaseKind::CaseI) {
          for (double sl = 0.6; sl < ell; sl += 0.37) sls.push_back(sl);
        } else {
          for (double s = 0.25; s <= 0.9 + 1e-12; s += 0.05) sls.push_back(s * ell);
        }
        for (double sl : sls) {
          if (std::abs(sl - std::floor(sl) - 0.5) < 1e-3) continue;
          for (int k = 1; k <= 40; ++k) {
            const double eps = 0.2 * k / 40.0;
            const auto exact = superpose(c, g, ell, sl, eps, 0.0);
            const auto approx = small_eps_delta_e(c, g, ell, sl, eps);
            if (approx.prefactor == 0.0) continue;
            const double ratio = std::abs(exact.delta_e - approx.delta_e) / (std::pow(eps, 4) * std::abs(approx.prefactor));
            worst = std::max(worst, ratio);
            ++points;
          }
        }
      }
    }
  }
  o.passed = worst <= 5.0;
  o.detail = std::to_string(points) + " points, max |dE - dE_small| / (eps^4 |prefactor|) = " + fmt("%.3f", worst);
  return o;
}

Outcome mixing() {
  Outcome o;
  double worst_pair = 0.0;
  double worst_i = 0.0;   // |ratio/(eps^2/4) - 1| / eps^2
  double worst_ii = 0.0;  // |ratio/(eps^2/(4 sigma^2)) - 1| / (eps^2/sigma^2)
  for (auto c : {FluxCaseKind::CaseI, FluxCaseKind::CaseII}) {
    for (auto g : {GeometryKind::Ring, GeometryKind::Harmonic}) {
      const int ell = 12;  // keeps s * ell off half-integers
      for (double s = 0.2; s <= 0.9 + 1e-12; s += 0.05) {
        const double sl = s * ell;
        for (int k = 1; k <= 20; ++k) {
          const double eps = 0.01 * k;
          const auto r = superpose(c, g, ell, sl, eps, 0.3);
          const double xi_ratio = std::norm(r.xi(1) / r.xi(0));
          const double zeta_ratio = std::norm(r.zeta(0) / r.zeta(1));
          worst_pair = std::max(worst_pair, std::abs(xi_ratio - zeta_ratio) / zeta_ratio);
          if (c == FluxCaseKind::CaseI) {
            worst_i = std::max(worst_i, std::abs(xi_ratio / (eps * eps / 4.0) - 1.0) / (eps * eps));
          } else {
            const double ref = eps * eps / (4.0 * s * s);
            worst_ii = std::max(worst_ii, std::abs(xi_ratio / ref - 1.0) / (eps * eps / (s * s)));
          }
        }
      }
    }
  }
  o.passed = worst_pair <= 1e-13 && worst_i <= 1.0 && worst_ii <= 1.0;
  o.detail = "xi/zeta max rel " + fmt("%.2e", worst_pair) + ", case i rel/eps^2 " + fmt("%.3f", worst_i) +
             ", case ii rel/(eps/sigma)^2 " + fmt("%.3f", worst_ii);
  return o;
}

Outcome feasibility_grid() {
  Outcome o;
  const int ell = 16;
  const std::vector<double> sls = cli::parse_grid("1:12:12");
  const std::vector<double> da = cli::parse_grid("0.5:4:351");
  const double cell = da[1] - da[0];
  const auto rows = feasibility_sweep(FluxCaseKind::CaseI, GeometryKind::Ring, ell, sls, da);
  int boundary_bad = 0;
  int row3_bad = 0;
  double worst_offset = 0.0;
  for (std::size_t i = 0; i < sls.size(); ++i) {
    const double boundary = feasibility_boundary(FluxCaseKind::CaseI, GeometryKind::Ring, ell, sls[i]);
    double last_infeasible = da.front() - cell;
    double first_feasible = da.back() + cell;
    for (std::size_t j = 0; j < da.size(); ++j) {
      const auto& row = rows[i * da.size() + j];
      if (!row.feasible) last_infeasible = std::max(last_infeasible, row.delta_alpha);
      if (row.feasible) first_feasible = std::min(first_feasible, row.delta_alpha);
      if (std::abs(row.delta_alpha - 3.0) < 1e-9 && !row.feasible) ++row3_bad;
    }
    // The transition lies between the two; the root must sit within a cell of it.
    double offset = 0.0;
    if (boundary < last_infeasible) offset = last_infeasible - boundary;
    if (boundary > first_feasible) offset = boundary - first_feasible;
    if (first_feasible < last_infeasible) offset = std::max(offset, last_infeasible - first_feasible);
    worst_offset = std::max(worst_offset, offset);
    if (offset > cell) ++boundary_bad;
  }
  o.passed = boundary_bad == 0 && row3_bad == 0;
  o.detail = std::to_string(sls.size()) + " sigma ell rows, worst boundary offset " + fmt("%.2e", worst_offset) +
             " (cell " + fmt("%.2e", cell) + "), infeasible at 3.0: " + std::to_string(row3_bad);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", "--geometry", "ring", "--ell", "4", "--sigma-ell", "-6:6:601"},
      {"spectrum", "--geometry", "harmonic", "--ell", "4", "--sigma-ell", "-4:4:81", "--format", "json"},
      {"spectrum", "--geometry", "harmonic", "--ell", "4", "--sigma-ell", "1", "--profile", "1,-1"},
      {"gap", "--geometry", "ring", "--ell", "4", "--sigma-ell", "-3:3:61"},
      {"gap", "--geometry", "harmonic", "--ell", "1", "--ell-max", "20", "--format", "json"},
      {"superpose", "--case", "i", "--geometry", "ring", "--ell", "16", "--sigma-ell", "1:12:12"},
      {"superpose", "--case", "ii", "--geometry", "harmonic", "--ell", "8", "--sigma-ell", "2,5", "--boundary"},
      {"superpose", "--ell", "4", "--alpha-plus", "2", "--alpha-minus", "0.5", "--beta-mag2", "1"},
      {"verify"},
  };
  int differing = 0;
  int failed = 0;
  for (const auto& args : commands) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out;
      std::ostringstream err;
      if (cli::run(args, out, err) != cli::kExitOk) ++failed;
      if (rep == 0) {
        first = out.str();
      } else if (out.str() != first) {
        ++differing;
      }
    }
  }
  o.passed = differing == 0 && failed == 0;
  o.detail = std::to_string(commands.size()) + " commands twice, differing " + std::to_string(differing) +
             ", nonzero exits " + std::to_string(failed);
  return o;
}

struct Criterion {
  int number;
  std::function<Outcome()> body;
  double limit_s;  // 0: no runtime limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, ring_gap_law, 1.0},   {2, staircase, 1.0},       {3, ring_fd, 30.0},
      {4, harmonic_fd, 60.0},   {5, harmonic_gap_law, 1.0}, {6, energy_reduction, 60.0},
      {7, small_eps, 5.0},      {8, mixing, 5.0},          {9, feasibility_grid, 10.0},
      {10, determinism, 0.0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0.0 && seconds > c.limit_s) {
      o.passed = false;
      o.detail += ", over the " + fmt("%g", c.limit_s) + " s limit";
    }
    if (!o.passed) ++failures;
    std::printf("criterion %d: %s  %s  [%.3f s]\n", c.number, o.passed ? "PASS" : "FAIL", o.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
