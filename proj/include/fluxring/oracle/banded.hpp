#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace fluxring::oracle {

/// Hermitian matrix whose only nonzeros lie within `bandwidth` of the
/// diagonal modulo n (a banded matrix with periodic wrap-around). Stored by
/// upper diagonals: upper(k)[i] = H(i, (i + k) mod n), k = 0..bandwidth.
class PeriodicBandedHermitian {
 public:
  PeriodicBandedHermitian(int n, int bandwidth);

  int size() const { return n_; }
  int bandwidth() const { return p_; }

  std::vector<std::complex<double>>& upper(int k) { return upper_[static_cast<std::size_t>(k)]; }
  const std::vector<std::complex<double>>& upper(int k) const { return upper_[static_cast<std::size_t>(k)]; }

  std::complex<double> entry(int i, int j) const;

  Eigen::MatrixXcd dense() const;

  /// Number of eigenvalues strictly below `lambda` (Sylvester inertia of
  /// H - lambda I from a banded LDL^H of the interior block plus the Schur
  /// complement on the wrap-around border).
  int count_below(double lambda) const;

  /// Lowest `count` eigenvalues, ascending, by bisection on `count_below`.
  std::vector<double> lowest_eigenvalues(int count) const;

  /// Gershgorin interval containing the spectrum.
  std::pair<double, double> gershgorin() const;

 private:
  int n_;
  int p_;
  std::vector<std::vector<std::complex<double>>> upper_;
};

/// Real symmetric tridiagonal matrix with diagonal `diag` and off-diagonal
/// `off` (off[i] couples i and i+1).
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off);

  int size() const { return static_cast<int>(diag_.size()); }

  /// Sturm count: eigenvalues strictly below `lambda`.
  int count_below(double lambda) const;

  std::vector<double> lowest_eigenvalues(int count) const;

  /// Unit eigenvector for a converged eigenvalue by inverse iteration.
  Eigen::VectorXd eigenvector(double lambda) const;

  std::pair<double, double> gershgorin() const;

 private:
  std::vector<double> diag_;
  std::vector<double> off_;
};

}  // namespace fluxring::oracle
