#pragma once

#include <cmath>

#include "fluxring/errors.hpp"

namespace fluxring {

/// Generalized Laguerre polynomial L_n^a(x) via the three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}.
template <typename Scalar>
Scalar laguerre_gen(int n, Scalar a, Scalar x) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (!(a > Scalar(-1))) throw DomainError("Laguerre parameter must be > -1");
  if (!(x >= Scalar(0))) throw DomainError("Laguerre argument must be >= 0");
  Scalar prev = Scalar(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(1) + a - x;
  for (int k = 1; k < n; ++k) {
    const Scalar next = ((Scalar(2 * k + 1) + a - x) * cur - (Scalar(k) + a) * prev) / Scalar(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// ln Gamma(x) for x > 0.
template <typename Scalar>
Scalar log_gamma(Scalar x) {
  using std::lgamma;
  if (!(x > Scalar(0))) throw DomainError("log_gamma requires x > 0");
  return lgamma(x);
}

}  // namespace fluxring
