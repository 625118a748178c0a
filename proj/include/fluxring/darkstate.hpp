#pragma once

#include <string>

#include "fluxring/params.hpp"

namespace fluxring {

/// Mean spins of the two coherent-state components.
struct SpinPair {
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
};

/// The two amplitude conditions under which the components see flux tubes of
/// equal magnitude and opposite sign: |beta|^2 = +alpha_+ alpha_- (CaseI) or
/// |beta|^2 = -alpha_+ alpha_- (CaseII).
enum class FluxCaseKind { CaseI, CaseII, Neither };

struct FluxCase {
  FluxCaseKind kind = FluxCaseKind::Neither;
  double residual = 0.0;  // relative deviation of |beta|^2 from the closest of +-alpha_+ alpha_-
};

struct FluxClassification {
  FluxCase flux_case;
  SpinPair spins;
  double sigma = 0.0;  // common magnitude, sigma_+ (valid for CaseI/CaseII)
};

/// Dark-state cross terms: <D+-|D-+> and the coefficient g in
/// <D+-|grad D-+> = i g ell / r.
struct DarkOverlaps {
  double s_overlap = 0.0;
  double grad_coeff = 0.0;
};

struct BrightExcited {
  double eps_s = 0.0;
  double eps_a = 0.0;
};

/// Coherent-state overlap convention used by `epsilon_param`. `Paper` uses
/// exp(-|da|^2); `Standard` uses the textbook exp(-|da|^2 / 2).
enum class OverlapConvention { Paper, Standard };

inline constexpr double kDefaultCaseTolerance = 1e-9;

/// sigma = (alpha^2 - |beta|^2) / (alpha^2 + |beta|^2).
double mean_spin(double alpha, double beta_mag2);

FluxClassification classify_flux_case(const FieldConfig& config,
                                      double tol = kDefaultCaseTolerance);

/// Azimuthal gauge potential hbar ell sigma / r.
double gauge_potential_phi(int ell, double sigma, double r, double hbar = 1.0);

/// Flux 2 pi hbar sigma ell threading the trap center.
double effective_flux(int ell, double sigma, double hbar = 1.0);

/// Geometric centrifugal term hbar^2 ell^2 / (2 M r^2); `hbar2_over_2m` is
/// hbar^2/2M in the caller's units.
double scalar_potential(int ell, double r, double hbar2_over_2m = 1.0);

/// Symmetric/antisymmetric bright-excited eigenvalues +-|chi|^2 N. Only valid
/// on resonance.
BrightExcited bright_excited_eigenvalues(double chi_mag2, double photon_number,
                                         double detuning_e31 = 0.0);

DarkOverlaps dark_overlaps(FluxCaseKind kind, double sigma);

/// Non-orthogonality of the two components,
/// <alpha_+|alpha_-> sqrt(1 - sigma^2).
double epsilon_param(double delta_alpha, double sigma,
                     OverlapConvention convention = OverlapConvention::Paper);

/// Coherence decay exp(-|da|^2 gamma t / 2) of the optical superposition.
double decoherence_factor(double delta_alpha, double gamma_t);

/// Normalization denominator sqrt(2 [1 + |<Phi+|Phi->| cos(theta + psi)]).
double superposition_norm(double overlap_mag, double psi, double theta);

const char* to_string(FluxCaseKind kind);
FluxCaseKind parse_flux_case(const std::string& name);
OverlapConvention parse_overlap_convention(const std::string& name);

}  // namespace fluxring
