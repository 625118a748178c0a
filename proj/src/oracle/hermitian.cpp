#include "fluxring/oracle/hermitian.hpp"

#include <string>

namespace fluxring::oracle {

void require_hermitian(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw ValidationError("Hermitian matrix must be square");
  if (h.size() == 0) throw ValidationError("Hermitian matrix is empty");
  const double scale = h.cwiseAbs().maxCoeff();
  const double skew = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-13 * scale) {
    throw ValidationError("matrix is not Hermitian (skew " + std::to_string(skew) + ")");
  }
}

HermitianEigs hermitian_eigs(const Eigen::MatrixXcd& h, bool want_vectors) {
  require_hermitian(h);
  const Eigen::Index n = h.rows();

  DenseMatrix<double> doubled(2 * n, 2 * n);
  const Eigen::MatrixXd x = h.real();
  const Eigen::MatrixXd y = h.imag();
  doubled.topLeftCorner(n, n) = x;
  doubled.bottomRightCorner(n, n) = x;
  doubled.topRightCorner(n, n) = -y;
  doubled.bottomLeftCorner(n, n) = y;
  // Symmetrize exactly; require_hermitian tolerated rounding skew.
  doubled = (0.5 * (doubled + doubled.transpose())).eval();

  const SymmetricEigs<double> real_eigs = symmetric_jacobi<double>(doubled, want_vectors);

  HermitianEigs out;
  out.values.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lo = real_eigs.values(2 * k);
    const double hi = real_eigs.values(2 * k + 1);
    if (hi - lo > kPairTolerance) {
      throw NumericError("doubled spectrum does not pair at index " + std::to_string(k) + ": " +
                         std::to_string(lo) + " vs " + std::to_string(hi));
    }
    out.values(k) = 0.5 * (lo + hi);
  }
  if (!want_vectors) return out;

  // Each real eigenvector [u; v] of the embedding is the image of the complex
  // eigenvector u + i v (up to a phase). Within a cluster of equal values
  // the 2k real vectors span k complex directions; Gram-Schmidt picks them.
  out.vectors.resize(n, n);
  Eigen::Index filled = 0;
  Eigen::Index start = 0;
  while (start < 2 * n) {
    Eigen::Index stop = start + 2;
    while (stop < 2 * n && real_eigs.values(stop) - real_eigs.values(stop - 1) <= kPairTolerance) {
      stop += 1;
    }
    const Eigen::Index want = (stop - start) / 2;
    Eigen::Index got = 0;
    for (Eigen::Index c = start; c < stop && got < want; ++c) {
      Eigen::VectorXcd z(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        z(i) = {real_eigs.vectors(i, c), real_eigs.vectors(n + i, c)};
      }
      for (Eigen::Index j = filled; j < filled + got; ++j) {
        z -= out.vectors.col(j) * out.vectors.col(j).dot(z);
      }
      const double norm = z.norm();
      if (norm < 0.5) continue;
      out.vectors.col(filled + got) = z / norm;
      ++got;
    }
    if (got != want) throw NumericError("could not recover complex eigenvectors from the doubled spectrum");
    filled += got;
    start = stop;
  }
  return out;
}

}  // namespace fluxring::oracle
