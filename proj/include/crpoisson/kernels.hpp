#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "crpoisson/calculus.hpp"

namespace crp {

/// Combinatorial kappa coefficients and the Poisson-kernel families. All
/// builders are memoized per factory; results immutable.
class KernelFactory {
  public:
    explicit KernelFactory(const Calculus& cal);

    const Calculus& calculus() const { return *cal_; }
    int n() const { return cal_->n(); }

    /// binom(k,p) binom(p,j) binom(k-p,q-j); total, 0 outside support.
    static long kappa(long p, long q, long k, long j);

    /// Index admissibility for the omega family.
    bool admissible(long p, long q, long k, long j) const;

    /// w20^j ^ w02^{k-(p+q)+j} ^ w11^{p-j} ^ w11bar^{q-j}; throws on an
    /// inadmissible index.
    Multiform omegaJ(long p, long q, long k, long j) const;
    /// Total version: zero form when any exponent is negative.
    Multiform omegaJTotal(long p, long q, long k, long j) const;

    /// (dP I*)^{k-(p+q)} ^ (2 dK dP w11)^j ^ (dP Z*)^{p-j} ^ (dP Zbar*)^{q-j}
    Multiform piJ(long p, long q, long k, long j) const;
    Multiform piJTotal(long p, long q, long k, long j) const;

    /// (2i dK Z*)^j ^ (dP I*)^{k-(p+q)+j} ^ (dP Z*)^{p-j} ^ (dP Zbar*)^{q-j}
    Multiform tildePiJ(long p, long q, long k, long j) const;
    Multiform tildePiJTotal(long p, long q, long k, long j) const;

    /// sum_j kappa_j^{p,q;n+1} I* ^ pi_j^{p,q;n}, for p+q <= n.
    Multiform kernelLow(long p, long q) const;

    /// Two-parameter family for p+q >= n+1 (p, q <= n+1), linear in (alpha,
    /// beta).
    Multiform kernelHigh(long p, long q, const Scalar& alpha, const Scalar& beta) const;

    /// Real kernels phi_k; public range 0 <= k <= 2n.
    Multiform kernelReal(long k) const;
    /// Extended range including the boundary form phi_{2n+1} that closes the
    /// d_K phi_k = c_k d_P phi_{k+1} ladder at k = 2n.
    Multiform kernelRealAny(long k) const;

    /// Ladder constant: n-k+1 for k <= n, n-k-1 for k >= n+1.
    long ladderConstant(long k) const { return k <= n() ? n() - k + 1 : n() - k - 1; }

  private:
    const Calculus* cal_;
    Multiform dPI_, dPZ_, dPZb_, dKdPw11_, dKZ_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, Multiform> powerCache_;  // (which, exp)
    mutable std::map<std::tuple<long, long, long, long>, Multiform> omegaCache_, piCache_,
        tpiCache_;
    mutable std::map<std::pair<long, long>, Multiform> lowCache_, highACache_, highBCache_;

    const Multiform& power(int which, int exp) const;
    Multiform highBasis(long p, long q, bool betaSide) const;
};

}  // namespace crp
