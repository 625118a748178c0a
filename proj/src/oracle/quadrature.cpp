#include "fluxring/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "fluxring/errors.hpp"

namespace fluxring::oracle {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// points are the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxPanels = 4000;
constexpr int kInitialPanels = 8;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

void require_extent(double r_max) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw UsageError("r_max must be positive and finite");
}

double tail_estimate(const std::function<double(double)>& integrand, double r_max) {
  return std::abs(integrate(integrand, r_max, 2.0 * r_max + 10.0, 1e-16, 1e-10).value);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                           double rel_tol) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw UsageError("integration limits must be finite");
  if (a == b) return {};
  if (a > b) {
    QuadratureResult flipped = integrate(f, b, a, abs_tol, rel_tol);
    flipped.value = -flipped.value;
    return flipped;
  }

  std::priority_queue<Panel> heap;
  double value = 0.0;
  double error = 0.0;
  for (int k = 0; k < kInitialPanels; ++k) {
    const double lo = a + (b - a) * k / kInitialPanels;
    const double hi = k + 1 == kInitialPanels ? b : a + (b - a) * (k + 1) / kInitialPanels;
    const Panel p = gk15(f, lo, hi);
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (static_cast<int>(heap.size()) >= kMaxPanels) {
      throw NumericError("adaptive quadrature did not converge");
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // panel at machine resolution
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels so the result does not carry update drift.
  QuadratureResult out;
  out.panels = static_cast<int>(heap.size());
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

double default_quadrature_extent(const RadialFunction& f) {
  return std::sqrt(2.0 * (2.0 * f.n() + f.mu() + 1.0)) + 12.0;
}

double quadrature_norm(const RadialFunction& f, double r_max) {
  require_extent(r_max);
  const std::function<double(double)> integrand = [&f](double r) {
    const double v = f(r);
    return v * v * r;
  };
  const double tail = tail_estimate(integrand, r_max);
  if (tail > kTailLimit) throw DomainSizeError("quadrature domain too small: tail estimate exceeds 1e-8");
  return integrate(integrand, 0.0, r_max).value;
}

double quadrature_norm(const RadialFunction& f) { return quadrature_norm(f, default_quadrature_extent(f)); }

double radial_overlap(const RadialFunction& f, const RadialFunction& g, double r_max) {
  require_extent(r_max);
  const std::function<double(double)> integrand = [&f, &g](double r) { return f(r) * g(r) * r; };
  const double tail = tail_estimate(integrand, r_max);
  if (tail > kTailLimit) throw DomainSizeError("quadrature domain too small: tail estimate exceeds 1e-8");
  return integrate(integrand, 0.0, r_max).value;
}

}  // namespace fluxring::oracle
