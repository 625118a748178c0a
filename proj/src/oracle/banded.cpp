#include "fluxring/oracle/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fluxring/errors.hpp"
#include "fluxring/oracle/hermitian.hpp"

namespace fluxring::oracle {

namespace {

constexpr double kPivotFloor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

/// Bisection for the `index`-th eigenvalue (0-based) given a count function.
template <typename Count>
double bisect_eigenvalue(int index, double lo, double hi, Count count_below) {
  for (int it = 0; it < 256; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * scale) break;
    if (count_below(mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <typename Count>
std::vector<double> lowest_by_bisection(int count, int n, std::pair<double, double> bounds,
                                        Count count_below) {
  if (count < 0 || count > n) throw UsageError("requested more eigenvalues than the matrix has");
  const double pad = 1e-3 * std::max(1.0, bounds.second - bounds.first);
  const double lo = bounds.first - pad;
  const double hi = bounds.second + pad;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double floor_lo = lo;
  for (int k = 0; k < count; ++k) {
    // Eigenvalue k is no lower than eigenvalue k-1.
    const double value = bisect_eigenvalue(k, floor_lo, hi, count_below);
    out.push_back(value);
    floor_lo = std::max(lo, value - 1e-9 * std::max(1.0, std::abs(value)));
  }
  return out;
}

}  // namespace

PeriodicBandedHermitian::PeriodicBandedHermitian(int n, int bandwidth) : n_(n), p_(bandwidth) {
  if (bandwidth < 1) throw UsageError("periodic band needs bandwidth >= 1");
  if (n < 4 * bandwidth + 2) throw UsageError("periodic banded matrix is too small for its bandwidth");
  upper_.assign(static_cast<std::size_t>(bandwidth + 1),
                std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
}

std::complex<double> PeriodicBandedHermitian::entry(int i, int j) const {
  const int d = ((j - i) % n_ + n_) % n_;
  if (d <= p_) return upper_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
  if (n_ - d <= p_) return std::conj(upper_[static_cast<std::size_t>(n_ - d)][static_cast<std::size_t>(j)]);
  return {0.0, 0.0};
}

Eigen::MatrixXcd PeriodicBandedHermitian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = -p_; k <= p_; ++k) {
      const int j = ((i + k) % n_ + n_) % n_;
      m(i, j) = entry(i, j);
    }
  }
  return m;
}

std::pair<double, double> PeriodicBandedHermitian::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n_; ++i) {
    double radius = 0.0;
    for (int k = 1; k <= p_; ++k) {
      radius += std::abs(entry(i, (i + k) % n_)) + std::abs(entry(i, (i - k + n_) % n_));
    }
    const double c = entry(i, i).real();
    lo = std::min(lo, c - radius);
    hi = std::max(hi, c + radius);
  }
  return {lo, hi};
}

int PeriodicBandedHermitian::count_below(double lambda) const {
  const int m = n_ - p_;
  const int p = p_;
  const double pivmin = kPivotFloor * std::max(1.0, std::abs(lambda));

  // Banded LDL^H of the interior block B - lambda I; l(i, k-1) = L(i, i-k).
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(m, p);
  std::vector<double> d(static_cast<std::size_t>(m));
  int negatives = 0;
  auto L = [&](int i, int j) -> std::complex<double> {
    const int k = i - j;
    return (k >= 1 && k <= p && j >= 0) ? l(i, k - 1) : std::complex<double>{};
  };
  for (int j = 0; j < m; ++j) {
    double dj = entry(j, j).real() - lambda;
    for (int k = std::max(0, j - p); k < j; ++k) dj -= std::norm(L(j, k)) * d[static_cast<std::size_t>(k)];
    if (std::abs(dj) < pivmin) dj = pivmin;
    d[static_cast<std::size_t>(j)] = dj;
    if (dj < 0.0) ++negatives;
    for (int i = j + 1; i <= std::min(j + p, m - 1); ++i) {
      std::complex<double> t = entry(i, j);
      for (int k = std::max(0, i - p); k < j; ++k) {
        t -= L(i, k) * d[static_cast<std::size_t>(k)] * std::conj(L(j, k));
      }
      l(i, i - j - 1) = t / dj;
    }
  }

  // Schur complement S = D_border - C^H B^{-1} C on the last p indices.
  Eigen::MatrixXcd c(m, p);
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < p; ++b) c(i, b) = entry(i, m + b);

  Eigen::MatrixXcd x = c;
  for (int i = 0; i < m; ++i)
    for (int k = std::max(0, i - p); k < i; ++k) x.row(i) -= L(i, k) * x.row(k);
  for (int i = 0; i < m; ++i) x.row(i) /= d[static_cast<std::size_t>(i)];
  for (int i = m - 1; i >= 0; --i)
    for (int k = i + 1; k <= std::min(i + p, m - 1); ++k) x.row(i) -= std::conj(L(k, i)) * x.row(k);

  Eigen::MatrixXcd s(p, p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) s(a, b) = entry(m + a, m + b) - (a == b ? lambda : 0.0);
  s -= c.adjoint() * x;

  // Inertia of the small block from its real symmetric embedding.
  DenseMatrix<double> emb(2 * p, 2 * p);
  emb.topLeftCorner(p, p) = s.real();
  emb.bottomRightCorner(p, p) = s.real();
  emb.topRightCorner(p, p) = -s.imag();
  emb.bottomLeftCorner(p, p) = s.imag();
  emb = (0.5 * (emb + emb.transpose())).eval();
  const SymmetricEigs<double> small = symmetric_jacobi<double>(emb, false, 1e-14);
  int small_neg = 0;
  for (Eigen::Index k = 0; k < small.values.size(); ++k)
    if (small.values(k) < 0.0) ++small_neg;
  return negatives + (small_neg + 1) / 2;
}

std::vector<double> PeriodicBandedHermitian::lowest_eigenvalues(int count) const {
  return lowest_by_bisection(count, n_, gershgorin(), [this](double x) { return count_below(x); });
}

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off)
    : diag_(std::move(diag)), off_(std::move(off)) {
  if (diag_.empty()) throw UsageError("tridiagonal matrix is empty");
  if (off_.size() + 1 != diag_.size()) throw UsageError("tridiagonal off-diagonal has the wrong length");
}

std::pair<double, double> SymmetricTridiagonal::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off_[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off_[i]) : 0.0);
    lo = std::min(lo, diag_[i] - r);
    hi = std::max(hi, diag_[i] + r);
  }
  return {lo, hi};
}

int SymmetricTridiagonal::count_below(double lambda) const {
  const double pivmin = kPivotFloor * std::max(1.0, std::abs(lambda));
  int count = 0;
  double q = diag_[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag_.size(); ++i) {
    q = diag_[i] - lambda - off_[i - 1] * off_[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> SymmetricTridiagonal::lowest_eigenvalues(int count) const {
  return lowest_by_bisection(count, size(), gershgorin(), [this](double x) { return count_below(x); });
}

Eigen::VectorXd SymmetricTridiagonal::eigenvector(double lambda) const {
  const int n = size();
  const auto bounds = gershgorin();
  const double scale = std::max(std::abs(bounds.first), std::abs(bounds.second));
  // LU with partial pivoting of T - lambda I (tridiagonal, one extra
  // superdiagonal of fill).
  std::vector<double> dl(off_.begin(), off_.end());
  std::vector<double> du(off_.begin(), off_.end());
  std::vector<double> du2(static_cast<std::size_t>(std::max(n - 2, 0)), 0.0);
  std::vector<double> d(diag_);
  std::vector<int> ipiv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] -= lambda;
    ipiv[static_cast<std::size_t>(i)] = i;
  }
  for (int i = 0; i + 1 < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (std::abs(d[u]) >= std::abs(dl[u])) {
      if (d[u] == 0.0) d[u] = std::numeric_limits<double>::epsilon() * scale;
      const double fact = dl[u] / d[u];
      dl[u] = fact;
      d[u + 1] -= fact * du[u];
    } else {
      const double fact = d[u] / dl[u];
      d[u] = dl[u];
      dl[u] = fact;
      const double temp = du[u];
      du[u] = d[u + 1];
      d[u + 1] = temp - fact * d[u + 1];
      if (i + 2 < n) {
        du2[u] = du[u + 1];
        du[u + 1] = -fact * du[u + 1];
      }
      ipiv[u] = i + 1;
    }
  }
  for (auto& x : d)
    if (x == 0.0) x = std::numeric_limits<double>::epsilon() * scale;

  Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
  for (int it = 0; it < 4; ++it) {
    for (int i = 0; i + 1 < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (ipiv[u] == i) {
        b(i + 1) -= dl[u] * b(i);
      } else {
        const double temp = b(i);
        b(i) = b(i + 1);
        b(i + 1) = temp - dl[u] * b(i);
      }
    }
    b(n - 1) /= d[static_cast<std::size_t>(n - 1)];
    if (n > 1) b(n - 2) = (b(n - 2) - du[static_cast<std::size_t>(n - 2)] * b(n - 1)) / d[static_cast<std::size_t>(n - 2)];
    for (int i = n - 3; i >= 0; --i) {
      const auto u = static_cast<std::size_t>(i);
      b(i) = (b(i) - du[u] * b(i + 1) - du2[u] * b(i + 2)) / d[u];
    }
    const double norm = b.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw NumericError("inverse iteration broke down");
    b /= norm;
  }
  // Fix the sign so the first significant component is positive.
  for (int i = 0; i < n; ++i) {
    if (std::abs(b(i)) > 1e-8) {
      if (b(i) < 0.0) b = -b;
      break;
    }
  }
  return b;
}

}  // namespace fluxring::oracle
