#pragma once

#include <span>
#include <string>
#include <vector>

#include "fluxring/darkstate.hpp"
#include "fluxring/geneig.hpp"
#include "fluxring/params.hpp"

namespace fluxring {

/// Stationary superposition of the counter-rotating states +-m_check under a
/// control field in a coherent-state superposition. Energies are in the
/// geometry's unit (hbar^2/2I or hbar*Omega).
struct SuperpositionResult {
  FluxCaseKind flux_case = FluxCaseKind::CaseI;
  GeometryKind geometry = GeometryKind::Ring;
  int ell = 0;
  double sigma_ell = 0.0;
  double sigma = 0.0;
  double epsilon = 0.0;
  double theta = 0.0;
  int m_check = 0;

  double e_zero = 0.0;   // degenerate single-flux-tube ground energy
  double e_plus = 0.0;   // root continuous with e_zero as eps -> 0
  double e_minus = 0.0;
  double delta_e = 0.0;  // e_plus - e_zero, never positive

  /// Eigenvectors in the unnormalized representative form
  ///   CaseI:  xi ~ [-eps e^{i theta}, 1 - sqrt(1-eps^2)], zeta ~ [-eps e^{i theta}, 1 + sqrt(1-eps^2)]
  ///   CaseII: xi = [eps e^{i theta}, sigma - sqrt(eps^2+sigma^2)], zeta = [eps e^{i theta}, sigma + sqrt(eps^2+sigma^2)]
  Vector2c<double> xi;
  Vector2c<double> zeta;
  /// Same directions normalized in the overlap metric A (CaseI) or the
  /// identity (CaseII).
  Vector2c<double> xi_normalized;
  Vector2c<double> zeta_normalized;

  double mixing_ratio = 0.0;  // |xi_- / xi_+|^2 = |zeta_+ / zeta_-|^2
  double gap = 0.0;           // lowest excitation without the superposition
  bool feasible = false;      // |delta_e| < gap
  bool boundary = false;      // |delta_e| == gap to rounding

  std::vector<std::string> warnings;
};

SuperpositionResult superpose_ring(FluxCaseKind flux_case, int ell, double sigma_ell, double epsilon,
                                   double theta);

SuperpositionResult superpose_harmonic(FluxCaseKind flux_case, int ell, double sigma_ell,
                                       double epsilon, double theta);

SuperpositionResult superpose(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                              double sigma_ell, double epsilon, double theta);

/// Leading small-eps behaviour of delta_e:
///   ring   CaseI  -|sigma ell m| eps^2          CaseII  ell m eps^2 / sigma
///   trap   CaseI  -|sigma ell m| eps^2 / 2 mu   CaseII  ell m eps^2 / (2 sigma mu)
struct SmallEpsEstimate {
  double delta_e = 0.0;
  double prefactor = 0.0;          // coefficient of eps^2
  bool outside_validity = false;   // eps > 0.3
};

inline constexpr double kSmallEpsLimit = 0.3;

SmallEpsEstimate small_eps_delta_e(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                   double sigma_ell, double epsilon);

struct FeasibilityRow {
  FluxCaseKind flux_case = FluxCaseKind::CaseI;
  GeometryKind geometry = GeometryKind::Ring;
  int ell = 0;
  double sigma_ell = 0.0;
  double delta_alpha = 0.0;
  double epsilon = 0.0;
  double delta_e = 0.0;
  double gap = 0.0;
  double mixing_ratio = 0.0;
  bool feasible = false;
};

/// Energy reduction over integer sigma_ell values and coherent-amplitude
/// separations |alpha_+ - alpha_-|. Rows ordered by (sigma_ell index,
/// delta_alpha index).
std::vector<FeasibilityRow> feasibility_sweep(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                              std::span<const double> sigma_ell_integers,
                                              std::span<const double> delta_alpha,
                                              OverlapConvention convention = OverlapConvention::Paper,
                                              double theta = 0.0);

/// Smallest |alpha_+ - alpha_-| at which |delta_e| = gap, found by
/// bisection; 0 when the point is feasible for every separation.
double feasibility_boundary(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                            OverlapConvention convention = OverlapConvention::Paper);

}  // namespace fluxring
