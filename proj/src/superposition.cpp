#include "fluxring/superposition.hpp"

#include <cmath>
#include <cstdlib>

#include "fluxring/errors.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/ring.hpp"

namespace fluxring {

namespace {

struct Setup {
  double sigma = 0.0;
  int m_check = 0;
  double x = 0.0;       // |sigma ell m_check|
  double lm = 0.0;      // |ell m_check|
  double s = 1.0;       // sqrt(1 - eps^2)
  double r = 0.0;       // sqrt(eps^2 + sigma^2)
};

Setup validate_and_prepare(FluxCaseKind flux_case, int ell, double sigma_ell, double epsilon,
                           SuperpositionResult& out) {
  if (flux_case == FluxCaseKind::Neither) {
    throw UnsupportedCaseError("superposition requires case (i) or case (ii)");
  }
  if (ell < 1) throw DomainError("superposition requires ell >= 1");
  if (!std::isfinite(sigma_ell) || std::abs(sigma_ell) > ell) {
    throw DomainError("|sigma ell| must not exceed ell (|sigma| <= 1)");
  }
  if (!(epsilon >= 0.0)) throw DomainError("eps must be >= 0");
  if (!(epsilon < 1.0)) throw SingularOverlapError("eps >= 1 makes the overlap matrix singular");
  if (ground_is_degenerate(sigma_ell)) {
    throw DegeneracyError("half-integer sigma ell: ground angular momentum is degenerate");
  }

  Setup st;
  st.sigma = sigma_ell / ell;
  if (flux_case == FluxCaseKind::CaseII) {
    if (st.sigma < 0.0) throw DomainError("case (ii) closed forms assume sigma >= 0");
    if (st.sigma == 0.0) {
      out.warnings.emplace_back("sigma = 0: small-eps expansion of case (ii) is singular; exact form used");
    }
  }
  st.m_check = ground_m(sigma_ell);
  st.x = std::abs(sigma_ell * st.m_check);
  st.lm = std::abs(static_cast<double>(ell) * st.m_check);
  st.s = std::sqrt(1.0 - epsilon * epsilon);
  st.r = std::hypot(epsilon, st.sigma);
  return st;
}

void fill_common(SuperpositionResult& out, FluxCaseKind flux_case, GeometryKind geometry, int ell,
                 double sigma_ell, double epsilon, double theta, const Setup& st) {
  out.flux_case = flux_case;
  out.geometry = geometry;
  out.ell = ell;
  out.sigma_ell = sigma_ell;
  out.sigma = st.sigma;
  out.epsilon = epsilon;
  out.theta = theta;
  out.m_check = st.m_check;
}

Vector2c<double> normalized(const Vector2c<double>& v, const Matrix2c<double>& metric) {
  const double n2 = (v.adjoint() * metric * v)(0, 0).real();
  return v / std::sqrt(n2);
}

void fill_vectors(SuperpositionResult& out, const Setup& st) {
  const double eps = out.epsilon;
  const std::complex<double> phase = std::polar(1.0, out.theta);
  if (out.flux_case == FluxCaseKind::CaseI) {
    // 1 - s = eps^2 / (1 + s) without cancellation.
    const double one_minus_s = eps * eps / (1.0 + st.s);
    out.xi << -eps * phase, one_minus_s;
    out.zeta << -eps * phase, 1.0 + st.s;
    const double ratio = eps / (1.0 + st.s);
    out.mixing_ratio = ratio * ratio;
    const Matrix2c<double> a = overlap_matrix(eps, out.theta);
    Vector2c<double> xi_rep;
    xi_rep << -phase, ratio;
    out.xi_normalized = normalized(xi_rep, a);
    out.zeta_normalized = normalized(out.zeta, a);
    return;
  }
  // sigma - r = -eps^2 / (sigma + r) for sigma >= 0.
  const double denom = st.sigma + st.r;
  const double sigma_minus_r = denom > 0.0 ? -eps * eps / denom : 0.0;
  out.xi << eps * phase, sigma_minus_r;
  out.zeta << eps * phase, denom;
  const Matrix2c<double> identity = Matrix2c<double>::Identity();
  if (denom > 0.0) {
    const double ratio = eps / denom;
    out.mixing_ratio = ratio * ratio;
    Vector2c<double> xi_rep;
    xi_rep << phase, -ratio;
    out.xi_normalized = normalized(xi_rep, identity);
    out.zeta_normalized = normalized(out.zeta, identity);
  } else {
    out.mixing_ratio = 0.0;
    out.xi_normalized << 1.0, 0.0;
    out.zeta_normalized << 0.0, 1.0;
  }
}

void fill_feasibility(SuperpositionResult& out, double gap) {
  out.gap = gap;
  const double mag = std::abs(out.delta_e);
  out.boundary = std::abs(mag - gap) <= 1e-12 * std::max(gap, 1e-300);
  out.feasible = !out.boundary && mag < gap;
}

}  // namespace

SuperpositionResult superpose_ring(FluxCaseKind flux_case, int ell, double sigma_ell, double epsilon,
                                   double theta) {
  SuperpositionResult out;
  const Setup st = validate_and_prepare(flux_case, ell, sigma_ell, epsilon, out);
  fill_common(out, flux_case, GeometryKind::Ring, ell, sigma_ell, epsilon, theta, st);

  const double mc = st.m_check;
  const double a = static_cast<double>(ell) * ell + mc * mc;
  out.e_zero = a - 2.0 * st.x;
  if (flux_case == FluxCaseKind::CaseI) {
    out.e_plus = a - 2.0 * st.x / st.s;
    out.e_minus = a + 2.0 * st.x / st.s;
    // 1/s - 1 = eps^2 / (s (1 + s))
    out.delta_e = -2.0 * st.x * epsilon * epsilon / (st.s * (1.0 + st.s));
  } else {
    out.e_plus = a - 2.0 * st.lm * st.r;
    out.e_minus = a + 2.0 * st.lm * st.r;
    const double denom = st.r + st.sigma;
    out.delta_e = denom > 0.0 ? -2.0 * st.lm * epsilon * epsilon / denom : 0.0;
  }
  fill_vectors(out, st);
  fill_feasibility(out, ring_gap(ell, sigma_ell));
  return out;
}

SuperpositionResult superpose_harmonic(FluxCaseKind flux_case, int ell, double sigma_ell,
                                       double epsilon, double theta) {
  SuperpositionResult out;
  const Setup st = validate_and_prepare(flux_case, ell, sigma_ell, epsilon, out);
  fill_common(out, flux_case, GeometryKind::Harmonic, ell, sigma_ell, epsilon, theta, st);

  const double mu0 = mu(ell, sigma_ell, st.m_check);
  if (!(mu0 > 0.0)) throw DomainError("mu of the ground state vanishes (|sigma| = 1, |m| = ell)");
  const double eta = mu0 + 1.0 + st.x / mu0;
  out.e_zero = mu0 + 1.0;
  if (flux_case == FluxCaseKind::CaseI) {
    const double split = st.x / (mu0 * st.s);
    out.e_plus = eta - split;
    out.e_minus = eta + split;
    out.delta_e = -(st.x / mu0) * epsilon * epsilon / (st.s * (1.0 + st.s));
  } else {
    const double split = st.lm * st.r / mu0;
    out.e_plus = eta - split;
    out.e_minus = eta + split;
    const double denom = st.r + st.sigma;
    out.delta_e = denom > 0.0 ? -(st.lm / mu0) * epsilon * epsilon / denom : 0.0;
  }
  fill_vectors(out, st);
  fill_feasibility(out, harmonic_gap(ell, sigma_ell));
  return out;
}

SuperpositionResult superpose(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                              double sigma_ell, double epsilon, double theta) {
  return geometry == GeometryKind::Ring ? superpose_ring(flux_case, ell, sigma_ell, epsilon, theta)
                                        : superpose_harmonic(flux_case, ell, sigma_ell, epsilon, theta);
}

SmallEpsEstimate small_eps_delta_e(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                   double sigma_ell, double epsilon) {
  if (flux_case == FluxCaseKind::Neither) {
    throw UnsupportedCaseError("small-eps law requires case (i) or case (ii)");
  }
  if (ell < 1) throw DomainError("small-eps law requires ell >= 1");
  if (!(epsilon >= 0.0)) throw DomainError("eps must be >= 0");
  const double sigma = sigma_ell / ell;
  const int mc = ground_m(sigma_ell);
  const double x = std::abs(sigma_ell * mc);
  const double lm = static_cast<double>(ell) * mc;

  double prefactor = 0.0;
  if (flux_case == FluxCaseKind::CaseI) {
    prefactor = -x;
  } else {
    if (!(sigma > 0.0)) throw DomainError("case (ii) small-eps expansion diverges for sigma <= 0");
    prefactor = lm / sigma;
  }
  if (geometry == GeometryKind::Harmonic) {
    const double mu0 = mu(ell, sigma_ell, mc);
    if (!(mu0 > 0.0)) throw DomainError("mu of the ground state vanishes");
    prefactor /= 2.0 * mu0;
  }
  SmallEpsEstimate est;
  est.prefactor = prefactor;
  est.delta_e = prefactor * epsilon * epsilon;
  est.outside_validity = epsilon > kSmallEpsLimit;
  return est;
}

namespace {

void require_integer_sigma_ell(double sigma_ell, int ell) {
  if (!std::isfinite(sigma_ell) || std::nearbyint(sigma_ell) != sigma_ell) {
    throw UsageError("feasibility grids take integer sigma ell values");
  }
  if (std::abs(sigma_ell) >= ell) throw DomainError("feasibility grids need |sigma ell| < ell");
}

}  // namespace

std::vector<FeasibilityRow> feasibility_sweep(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                              std::span<const double> sigma_ell_integers,
                                              std::span<const double> delta_alpha,
                                              OverlapConvention convention, double theta) {
  if (sigma_ell_integers.empty()) throw UsageError("sigma ell list is empty");
  if (delta_alpha.empty()) throw UsageError("delta alpha grid is empty");
  for (double s : sigma_ell_integers) require_integer_sigma_ell(s, ell);
  for (double d : delta_alpha) {
    if (!(d >= 0.0)) throw UsageError("|alpha_+ - alpha_-| values must be >= 0");
  }

  std::vector<FeasibilityRow> rows;
  rows.reserve(sigma_ell_integers.size() * delta_alpha.size());
  for (double s : sigma_ell_integers) {
    const double sigma = s / ell;
    for (double d : delta_alpha) {
      const double eps = epsilon_param(d, sigma, convention);
      const SuperpositionResult res = superpose(flux_case, geometry, ell, s, eps, theta);
      rows.push_back({flux_case, geometry, ell, s, d, eps, res.delta_e, res.gap, res.mixing_ratio,
                      res.feasible});
    }
  }
  return rows;
}

double feasibility_boundary(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                            OverlapConvention convention) {
  const double sigma = sigma_ell / ell;
  // Excess of |delta_e| over the gap; decreasing in delta_alpha.
  auto excess = [&](double d) {
    const double eps = epsilon_param(d, sigma, convention);
    const SuperpositionResult res = superpose(flux_case, geometry, ell, sigma_ell, eps, 0.0);
    return std::abs(res.delta_e) - res.gap;
  };
  if (excess(0.0) < 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (excess(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 64.0) throw NumericError("feasibility boundary not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fluxring
