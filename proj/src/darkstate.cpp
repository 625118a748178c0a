#include "fluxring/darkstate.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fluxring/errors.hpp"

namespace fluxring {

double mean_spin(double alpha, double beta_mag2) {
  if (beta_mag2 < 0.0) throw DomainError("|beta|^2 must be non-negative");
  const double a2 = alpha * alpha;
  const double total = a2 + beta_mag2;
  if (total == 0.0) throw DegenerateFieldError("mean spin undefined: alpha and beta both vanish");
  return (a2 - beta_mag2) / total;
}

FluxClassification classify_flux_case(const FieldConfig& config, double tol) {
  config.validate();
  if (!(tol >= 0.0)) throw DomainError("classification tolerance must be >= 0");

  const double b2 = config.beta_mag2();
  const double product = config.alpha_plus * config.alpha_minus;
  const double dev_i = std::abs(b2 - product);
  const double dev_ii = std::abs(b2 + product);
  const bool case_i = dev_i <= tol * b2;
  const bool case_ii = dev_ii <= tol * b2;
  if (case_i && case_ii) {
    throw DegenerateFieldError("both flux conditions hold: beta = 0 with alpha_+ alpha_- = 0");
  }

  FluxClassification out;
  out.spins.sigma_plus = mean_spin(config.alpha_plus, b2);
  out.spins.sigma_minus = mean_spin(config.alpha_minus, b2);
  out.sigma = out.spins.sigma_plus;

  const double closest = std::min(dev_i, dev_ii);
  if (b2 > 0.0) {
    out.flux_case.residual = closest / b2;
  } else {
    out.flux_case.residual = closest == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }

  if (case_i) {
    out.flux_case.kind = FluxCaseKind::CaseI;
  } else if (case_ii) {
    out.flux_case.kind = FluxCaseKind::CaseII;
  } else {
    out.flux_case.kind = FluxCaseKind::Neither;
    return out;
  }

  // sigma_+ + sigma_- is O(residual) under either condition.
  const double spin_sum = std::abs(out.spins.sigma_plus + out.spins.sigma_minus);
  if (spin_sum > 4.0 * tol + 8.0 * std::numeric_limits<double>::epsilon()) {
    throw NumericError("flux condition satisfied but mean spins are not opposite");
  }
  return out;
}

double gauge_potential_phi(int ell, double sigma, double r, double hbar) {
  if (!(r > 0.0)) throw DomainError("gauge potential is singular on the flux-tube axis (r <= 0)");
  return hbar * ell * sigma / r;
}

double effective_flux(int ell, double sigma, double hbar) {
  return 2.0 * std::numbers::pi * hbar * sigma * ell;
}

double scalar_potential(int ell, double r, double hbar2_over_2m) {
  if (!(r > 0.0)) throw DomainError("scalar potential is singular on the flux-tube axis (r <= 0)");
  const double l = ell;
  return hbar2_over_2m * l * l / (r * r);
}

BrightExcited bright_excited_eigenvalues(double chi_mag2, double photon_number,
                                         double detuning_e31) {
  if (detuning_e31 != 0.0) {
    throw UnsupportedCaseError("bright/excited eigenvalues +-|chi|^2 N hold on resonance only");
  }
  if (photon_number < 0.0) throw DomainError("photon number N must be >= 0");
  if (chi_mag2 < 0.0) throw DomainError("|chi|^2 must be >= 0");
  const double e = chi_mag2 * photon_number;
  return {e, -e};
}

DarkOverlaps dark_overlaps(FluxCaseKind kind, double sigma) {
  if (!(std::abs(sigma) <= 1.0)) throw DomainError("|sigma| must be <= 1");
  const double c = std::sqrt(1.0 - sigma * sigma);
  switch (kind) {
    case FluxCaseKind::CaseI:
      return {c, 0.0};
    case FluxCaseKind::CaseII:
      return {0.0, -c};
    case FluxCaseKind::Neither:
      break;
  }
  throw UnsupportedCaseError("dark-state cross terms require case (i) or case (ii)");
}

double epsilon_param(double delta_alpha, double sigma, OverlapConvention convention) {
  if (!(std::abs(sigma) <= 1.0)) throw DomainError("|sigma| must be <= 1");
  const double d2 = delta_alpha * delta_alpha;
  const double overlap = convention == OverlapConvention::Paper ? std::exp(-d2) : std::exp(-0.5 * d2);
  return overlap * std::sqrt(1.0 - sigma * sigma);
}

double decoherence_factor(double delta_alpha, double gamma_t) {
  if (!(gamma_t >= 0.0)) throw DomainError("gamma t must be >= 0");
  return std::exp(-0.5 * delta_alpha * delta_alpha * gamma_t);
}

double superposition_norm(double overlap_mag, double psi, double theta) {
  if (!(overlap_mag >= 0.0 && overlap_mag <= 1.0)) {
    throw DomainError("overlap magnitude must lie in [0, 1]");
  }
  const double arg = 2.0 * (1.0 + overlap_mag * std::cos(theta + psi));
  // cos(pi) is -1 only to rounding, so the cancelled case is caught with a tolerance.
  if (!(arg > 16.0 * std::numeric_limits<double>::epsilon())) {
    throw DegenerateFieldError("superposition of identical components cancels (theta + psi = pi)");
  }
  return std::sqrt(arg);
}

const char* to_string(FluxCaseKind kind) {
  switch (kind) {
    case FluxCaseKind::CaseI:
      return "i";
    case FluxCaseKind::CaseII:
      return "ii";
    case FluxCaseKind::Neither:
      return "neither";
  }
  return "neither";
}

FluxCaseKind parse_flux_case(const std::string& name) {
  if (name == "i") return FluxCaseKind::CaseI;
  if (name == "ii") return FluxCaseKind::CaseII;
  throw UsageError("unknown case '" + name + "' (expected i or ii)");
}

OverlapConvention parse_overlap_convention(const std::string& name) {
  if (name == "paper") return OverlapConvention::Paper;
  if (name == "standard") return OverlapConvention::Standard;
  throw UsageError("unknown overlap convention '" + name + "' (expected paper or standard)");
}

}  // namespace fluxring
