#pragma once

#include <vector>

#include "fluxring/darkstate.hpp"
#include "fluxring/geneig.hpp"
#include "fluxring/oracle/report.hpp"
#include "fluxring/params.hpp"

namespace fluxring::oracle {

/// The coupled equations for the two flux-tube components in the basis
/// e^{i m phi} (times the n = 0 radial state of mu_bar in the trap). Block m:
///   ring   CaseI  [[l2+m2+2 sl m, eps (l2+m2) w], [c.c., l2+m2-2 sl m]], overlap A
///   ring   CaseII [[l2+m2+2 sl m, -2 l m eps w], [c.c., l2+m2-2 sl m]], identity
///   trap   CaseI  [[eta + sl m/mu_bar, eps eta w], [c.c., eta - sl m/mu_bar]], overlap A
///   trap   CaseII [[eta + sl m/mu_bar, -l m eps w/mu_bar], [c.c., eta - sl m/mu_bar]], identity
/// with w = e^{i theta}, mu_bar = sqrt(l2 + m2 - 2|sl m|), eta = mu_bar + 1 + |sl m|/mu_bar.
GenEig2<double> mode_block(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                           double epsilon, double theta, int m);

/// Closed-form lower root of mode_block.
double mode_block_lower(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                        double epsilon, int m);

struct BlockScanRow {
  int m = 0;
  double lower = 0.0;  // pencil solve
  double upper = 0.0;
};

struct BlockScanResult {
  double min_energy = 0.0;
  int m_star = 0;
  int m_check = 0;
  double e_plus = 0.0;      // closed-form superposition energy
  bool at_check = false;    // |m*| == |m_check|
  bool consistent = false;  // at_check and min_energy matches e_plus to 1e-12 relative
  std::vector<BlockScanRow> rows;  // ascending m
  OracleReport report;
};

inline constexpr double kBlockScanTolerance = 1e-12;

/// Solves every block |m| <= m_max with gen_eig_2x2 and locates the global
/// minimum. Requires m_max >= |m_check| + 5; throws WindowError when the
/// minimum sits on the window edge.
BlockScanResult superposition_block_scan(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                         double sigma_ell, double epsilon, double theta, int m_max);

}  // namespace fluxring::oracle
