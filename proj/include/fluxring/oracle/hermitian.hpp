#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <algorithm>
#include <vector>

#include "fluxring/errors.hpp"

namespace fluxring::oracle {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct SymmetricEigs {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;  // ascending
  DenseMatrix<Scalar> vectors;                       // columns, empty unless requested
};

inline constexpr int kJacobiSweepBudget = 60;

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Sweeps until
/// the off-diagonal Frobenius norm drops below `rel_tol` times the full
/// Frobenius norm.
template <typename Scalar>
SymmetricEigs<Scalar> symmetric_jacobi(DenseMatrix<Scalar> a, bool want_vectors,
                                       Scalar rel_tol = Scalar(1e-12)) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw ValidationError("Jacobi input must be square");

  DenseMatrix<Scalar> v;
  if (want_vectors) v = DenseMatrix<Scalar>::Identity(n, n);

  const Scalar total = a.norm();
  auto off_norm = [&] {
    Scalar s = Scalar(0);
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
    return sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  for (; sweep < kJacobiSweepBudget; ++sweep) {
    if (off_norm() <= rel_tol * total) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar app = a(p, p);
        const Scalar aqq = a(q, q);
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Scalar vkp = v(k, p);
            const Scalar vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (sweep == kJacobiSweepBudget && off_norm() > rel_tol * total) {
    throw NumericError("Jacobi iteration did not converge within the sweep budget");
  }

  // Sort ascending, carrying vectors along.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  SymmetricEigs<Scalar> out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    if (want_vectors) out.vectors.col(i) = v.col(src);
  }
  return out;
}

struct HermitianEigs {
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXcd vectors;   // orthonormal columns, empty unless requested
};

/// Absolute tolerance used to pair the doubled real spectrum.
inline constexpr double kPairTolerance = 1e-9;

/// All eigenvalues of a complex Hermitian matrix. The matrix X + iY is
/// embedded as the real symmetric [[X, -Y], [Y, X]], whose spectrum is the
/// Hermitian spectrum with every value doubled; the pairs are matched and
/// collapsed.
HermitianEigs hermitian_eigs(const Eigen::MatrixXcd& h, bool want_vectors = false);

/// Throws ValidationError unless ||H - H^H||_max <= 1e-13 ||H||_max.
void require_hermitian(const Eigen::MatrixXcd& h);

}  // namespace fluxring::oracle
