#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>

#include "fluxring/errors.hpp"

namespace fluxring {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;
template <typename Scalar>
using Vector2r = Eigen::Matrix<Scalar, 2, 1>;

/// Hermitian-definite pencil H v = E A v.
template <typename Scalar>
struct GenEig2 {
  Matrix2c<Scalar> h;
  Matrix2c<Scalar> a;
};

/// Eigenvalues ascending; columns of `vectors` are A-orthonormal
/// (v^H A v = 1).
template <typename Scalar>
struct GenEig2Solution {
  Vector2r<Scalar> values;
  Matrix2c<Scalar> vectors;
};

/// Overlap matrix [[1, eps e^{i theta}], [eps e^{-i theta}, 1]].
template <typename Scalar>
Matrix2c<Scalar> overlap_matrix(Scalar eps, Scalar theta) {
  const std::complex<Scalar> w = std::polar(eps, theta);
  Matrix2c<Scalar> a;
  a << Scalar(1), w, std::conj(w), Scalar(1);
  return a;
}

namespace detail {

template <typename Scalar>
Scalar max_abs(const Matrix2c<Scalar>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
void require_hermitian(const Matrix2c<Scalar>& m, Scalar rel_tol, const char* what) {
  using std::abs;
  const Scalar scale = std::max(max_abs(m), Scalar(1e-300));
  const Scalar skew = std::max({abs(m(0, 1) - std::conj(m(1, 0))), abs(m(0, 0).imag()),
                                abs(m(1, 1).imag())});
  if (skew > rel_tol * scale) throw ValidationError(std::string(what) + " is not Hermitian");
}

/// f(M) for a 2x2 Hermitian M via M = c I + N with N^2 = delta^2 I.
template <typename Scalar, typename F>
Matrix2c<Scalar> hermitian_function(const Matrix2c<Scalar>& m, Scalar& lo, Scalar& hi, F f) {
  using std::hypot;
  const Scalar c = (m(0, 0).real() + m(1, 1).real()) / Scalar(2);
  const Scalar d = (m(0, 0).real() - m(1, 1).real()) / Scalar(2);
  const Scalar delta = hypot(d, std::abs(m(0, 1)));
  lo = c - delta;
  hi = c + delta;
  Matrix2c<Scalar> out = Matrix2c<Scalar>::Zero();
  const Scalar even = (f(hi) + f(lo)) / Scalar(2);
  out(0, 0) = even;
  out(1, 1) = even;
  if (delta > Scalar(0)) {
    const Scalar odd = (f(hi) - f(lo)) / (Scalar(2) * delta);
    out(0, 0) += odd * d;
    out(1, 1) -= odd * d;
    out(0, 1) = odd * m(0, 1);
    out(1, 0) = odd * std::conj(m(0, 1));
  }
  return out;
}

/// Unit eigenvector of the Hermitian 2x2 `m` for eigenvalue `lambda`.
template <typename Scalar>
Vector2c<Scalar> hermitian_eigvec(const Matrix2c<Scalar>& m, Scalar lambda, int fallback_axis) {
  Vector2c<Scalar> u(m(0, 1), lambda - m(0, 0).real());
  Vector2c<Scalar> w(lambda - m(1, 1).real(), std::conj(m(0, 1)));
  const Vector2c<Scalar>& pick = u.norm() >= w.norm() ? u : w;
  const Scalar n = pick.norm();
  if (n == Scalar(0)) {
    Vector2c<Scalar> e = Vector2c<Scalar>::Zero();
    e(fallback_axis) = Scalar(1);
    return e;
  }
  return pick / n;
}

}  // namespace detail

/// Solves the Hermitian-definite 2x2 pencil in closed form: congruence by
/// A^{-1/2} reduces it to an ordinary Hermitian eigenproblem.
template <typename Scalar>
GenEig2Solution<Scalar> gen_eig_2x2(const GenEig2<Scalar>& problem) {
  using std::sqrt;
  detail::require_hermitian(problem.h, Scalar(1e-14), "pencil matrix H");
  detail::require_hermitian(problem.a, Scalar(1e-14), "overlap matrix A");

  Scalar a_lo{}, a_hi{};
  const Matrix2c<Scalar> s =
      detail::hermitian_function(problem.a, a_lo, a_hi, [](Scalar x) { return Scalar(1) / sqrt(x); });
  if (!(a_lo > Scalar(0))) throw SingularOverlapError("overlap matrix is not positive definite (eps >= 1)");

  Matrix2c<Scalar> m = s * problem.h * s;
  // Re-symmetrize to remove rounding skew before the closed form.
  m(0, 0) = m(0, 0).real();
  m(1, 1) = m(1, 1).real();
  m(1, 0) = std::conj(m(0, 1));

  const Scalar t = (m(0, 0).real() + m(1, 1).real()) / Scalar(2);
  const Scalar d = (m(0, 0).real() - m(1, 1).real()) / Scalar(2);
  const Scalar r = std::hypot(d, std::abs(m(0, 1)));

  GenEig2Solution<Scalar> out;
  out.values << t - r, t + r;
  if (r == Scalar(0)) {
    out.vectors = s;
    return out;
  }
  // Assign the axis fallback by which diagonal entry is smaller.
  const int lo_axis = d <= Scalar(0) ? 0 : 1;
  out.vectors.col(0) = s * detail::hermitian_eigvec(m, out.values(0), lo_axis);
  out.vectors.col(1) = s * detail::hermitian_eigvec(m, out.values(1), 1 - lo_axis);
  return out;
}

/// Largest residual ||H v - E A v|| over the two eigenpairs.
template <typename Scalar>
Scalar pencil_residual(const GenEig2<Scalar>& problem, const GenEig2Solution<Scalar>& sol) {
  Scalar worst = Scalar(0);
  for (int k = 0; k < 2; ++k) {
    const Vector2c<Scalar> v = sol.vectors.col(k);
    const Vector2c<Scalar> res = problem.h * v - sol.values(k) * (problem.a * v);
    worst = std::max(worst, res.norm());
  }
  return worst;
}

}  // namespace fluxring
