#pragma once

#include <functional>

#include "fluxring/harmonic.hpp"

namespace fluxring::oracle {

inline constexpr double kTailLimit = 1e-8;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // summed |K15 - G7| over accepted panels
  int panels = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. Panels are
/// bisected until |K15 - G7| on each is below its share of
/// max(abs_tol, rel_tol |integral|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-14,
                           double rel_tol = 1e-13);

/// sqrt(2 (2n + mu + 1)) + 12: safely past the classical turning point.
double default_quadrature_extent(const RadialFunction& f);

/// int_0^{r_max} f(r)^2 r dr. Throws DomainSizeError when the neglected
/// tail, estimated on [r_max, 2 r_max + 10], exceeds 1e-8.
double quadrature_norm(const RadialFunction& f, double r_max);
double quadrature_norm(const RadialFunction& f);

/// int_0^{r_max} f(r) g(r) r dr, with the same tail check.
double radial_overlap(const RadialFunction& f, const RadialFunction& g, double r_max);

}  // namespace fluxring::oracle
