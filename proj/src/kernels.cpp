#include "crpoisson/kernels.hpp"

#include <stdexcept>

namespace crp {

KernelFactory::KernelFactory(const Calculus& cal) : cal_(&cal) {
    const BasicForms& b = cal.basic();
    dPI_ = cal.dP(b.Istar);
    dPZ_ = cal.dP(b.Zstar);
    dPZb_ = cal.dP(b.Zbarstar);
    dKdPw11_ = cal.dK(cal.dP(b.w11));
    dKZ_ = cal.dK(b.Zstar);
}

long KernelFactory::kappa(long p, long q, long k, long j) {
    return binomial(k, p) * binomial(p, j) * binomial(k - p, q - j);
}

bool KernelFactory::admissible(long p, long q, long k, long j) const {
    long nn = n();
    if (p < 0 || q < 0 || k - p < 0 || k - q < 0) return false;
    if (p > nn || q > nn || k - p > nn || k - q > nn) return false;
    return j >= std::max(0L, p + q - k) && j <= std::min(p, q);
}

const Multiform& KernelFactory::power(int which, int exp) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(which, exp);
    auto it = powerCache_.find(key);
    if (it != powerCache_.end()) return it->second;
    Multiform base;
    switch (which) {
        case 0: base = cal_->basic().w20; break;
        case 1: base = cal_->basic().w02; break;
        case 2: base = cal_->basic().w11; break;
        case 3: base = cal_->basic().w11bar; break;
        case 4: base = dPI_; break;
        case 5: base = dPZ_; break;
        case 6: base = dPZb_; break;
        case 7: base = dKdPw11_ * Scalar(2); break;
        case 8: base = dKZ_ * (Scalar::i() * Scalar(2)); break;
        default: throw std::logic_error("unknown power base");
    }
    // All bases are 2-forms, so iterative wedging is association-free.
    for (int e = 0; e <= exp; ++e) {
        auto k2 = std::make_pair(which, e);
        if (powerCache_.find(k2) != powerCache_.end()) continue;
        Multiform value =
            e == 0 ? Multiform::one(n()) : wedge(powerCache_.at({which, e - 1}), base);
        powerCache_.emplace(k2, std::move(value));
    }
    return powerCache_.at(key);
}

Multiform KernelFactory::omegaJTotal(long p, long q, long k, long j) const {
    if (j < 0 || k - (p + q) + j < 0 || p - j < 0 || q - j < 0) return Multiform::zero(n());
    auto key = std::make_tuple(p, q, k, j);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = omegaCache_.find(key);
        if (it != omegaCache_.end()) return it->second;
    }
    Multiform out = wedge(wedge(power(0, static_cast<int>(j)),
                                power(1, static_cast<int>(k - (p + q) + j))),
                          wedge(power(2, static_cast<int>(p - j)),
                                power(3, static_cast<int>(q - j))));
    std::lock_guard<std::mutex> lock(mu_);
    return omegaCache_.emplace(key, std::move(out)).first->second;
}

Multiform KernelFactory::omegaJ(long p, long q, long k, long j) const {
    if (!admissible(p, q, k, j))
        throw std::domain_error("omegaJ: inadmissible index (p,q,k,j)");
    return omegaJTotal(p, q, k, j);
}

Multiform KernelFactory::piJTotal(long p, long q, long k, long j) const {
    if (j < 0 || k - (p + q) < 0 || p - j < 0 || q - j < 0) return Multiform::zero(n());
    auto key = std::make_tuple(p, q, k, j);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = piCache_.find(key);
        if (it != piCache_.end()) return it->second;
    }
    Multiform out = wedge(wedge(power(4, static_cast<int>(k - (p + q))),
                                power(7, static_cast<int>(j))),
                          wedge(power(5, static_cast<int>(p - j)),
                                power(6, static_cast<int>(q - j))));
    std::lock_guard<std::mutex> lock(mu_);
    return piCache_.emplace(key, std::move(out)).first->second;
}

Multiform KernelFactory::piJ(long p, long q, long k, long j) const {
    if (j < 0 || j > std::min(p, q) || k - (p + q) < 0)
        throw std::domain_error("piJ: inadmissible index (p,q,k,j)");
    return piJTotal(p, q, k, j);
}

Multiform KernelFactory::tildePiJTotal(long p, long q, long k, long j) const {
    if (j < 0 || k - (p + q) + j < 0 || p - j < 0 || q - j < 0) return Multiform::zero(n());
    auto key = std::make_tuple(p, q, k, j);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tpiCache_.find(key);
        if (it != tpiCache_.end()) return it->second;
    }
    Multiform out = wedge(wedge(power(8, static_cast<int>(j)),
                                power(4, static_cast<int>(k - (p + q) + j))),
                          wedge(power(5, static_cast<int>(p - j)),
                                power(6, static_cast<int>(q - j))));
    std::lock_guard<std::mutex> lock(mu_);
    return tpiCache_.emplace(key, std::move(out)).first->second;
}

Multiform KernelFactory::tildePiJ(long p, long q, long k, long j) const {
    if (j < std::max(0L, p + q - k) || j > std::min(p, q))
        throw std::domain_error("tildePiJ: inadmissible index (p,q,k,j)");
    return tildePiJTotal(p, q, k, j);
}

Multiform KernelFactory::kernelLow(long p, long q) const {
    const long nn = n();
    if (p < 0 || q < 0)
        throw std::domain_error("kernelLow: negative K-type");
    if (p + q > nn)
        throw std::domain_error("kernelLow requires p+q <= n; use kernelHigh for p+q >= n+1");
    auto key = std::make_pair(p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lowCache_.find(key);
        if (it != lowCache_.end()) return it->second;
    }
    Multiform acc(static_cast<int>(nn));
    for (long j = 0; j <= std::min(p, q); ++j) {
        long c = kappa(p, q, nn + 1, j);
        if (c == 0) continue;
        acc = acc + wedge(cal_->basic().Istar, piJTotal(p, q, nn, j)) * Scalar(c);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return lowCache_.emplace(key, std::move(acc)).first->second;
}

Multiform KernelFactory::highBasis(long p, long q, bool betaSide) const {
    const long nn = n();
    auto key = std::make_pair(p, q);
    auto& cache = betaSide ? highBCache_ : highACache_;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const BasicForms& b = cal_->basic();
    const Scalar denom(Rational(p + q - nn));
    const Scalar i2 = Scalar::i() * Scalar(2);
    Multiform acc(static_cast<int>(nn));
    for (long j = -2; j <= std::min(p, q) + 2; ++j) {
        Scalar aj, bj, gj, dj;
        if (!betaSide) {
            aj = Scalar(kappa(p, q + 1, nn + 1, j + 1));
            gj = Scalar(kappa(p + 1, q + 1, nn + 1, j + 1)) * Scalar(p + 1) / denom;
            dj = Scalar(kappa(p, q, nn, j + 1)) * Scalar(-(nn + 1)) * Scalar(nn + 1 - q) / denom;
        } else {
            bj = Scalar(kappa(p + 1, q, nn + 1, j + 1));
            gj = Scalar(kappa(p + 1, q + 1, nn + 1, j + 1)) * Scalar(q + 1) / denom;
            dj = Scalar(kappa(p, q, nn, j + 1)) * Scalar(-(nn + 1)) * Scalar(nn + 1 - p) / denom;
        }
        if (!aj.isZero()) acc = acc + wedge(b.Zstar, tildePiJTotal(p - 1, q, nn, j)) * aj;
        if (!bj.isZero()) acc = acc + wedge(b.Zbarstar, tildePiJTotal(p, q - 1, nn, j)) * bj;
        if (!gj.isZero()) acc = acc + wedge(b.Istar, tildePiJTotal(p, q, nn, j)) * gj;
        if (!dj.isZero())
            acc = acc + wedge(wedge(b.Istar, wedge(b.Zstar, b.Zbarstar)),
                              tildePiJTotal(p - 1, q - 1, nn - 1, j)) *
                            (dj * i2);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cache.emplace(key, std::move(acc)).first->second;
}

Multiform KernelFactory::kernelHigh(long p, long q, const Scalar& alpha,
                                    const Scalar& beta) const {
    const long nn = n();
    if (p + q <= nn)
        throw std::domain_error("kernelHigh requires p+q >= n+1");
    if (p < 0 || q < 0 || p > nn + 1 || q > nn + 1)
        throw std::domain_error("kernelHigh: K-type out of range");
    Multiform out(static_cast<int>(nn));
    if (!alpha.isZero()) out = out + highBasis(p, q, false) * alpha;
    if (!beta.isZero()) out = out + highBasis(p, q, true) * beta;
    return out;
}

Multiform KernelFactory::kernelRealAny(long k) const {
    const long nn = n();
    if (k < 0 || k > 2 * nn + 1) throw std::domain_error("kernelReal: k out of range");
    Multiform acc(static_cast<int>(nn));
    if (k <= nn) {
        Rational twoK(mpz_class(1), mpz_class(1) << k);
        for (long p = 0; p <= k; ++p) {
            long q = k - p;
            Scalar lambda = Scalar(twoK) * Scalar::iPow(q - p) *
                            factorialScalar(nn + 1 - p) * factorialScalar(nn + 1 - q);
            acc = acc + kernelLow(p, q) * lambda;
        }
        return acc;
    }
    Rational twoK1(mpz_class(1), mpz_class(1) << (k + 1));
    for (long p = std::max(0L, k - nn - 1); p <= std::min(nn + 1, k); ++p) {
        long q = k - p;
        Scalar alpha, beta;
        if (q <= nn)
            alpha = Scalar(twoK1) * Scalar::iPow(q - p) * factorialScalar(nn + 1 - p) *
                    factorialScalar(nn - q);
        if (p <= nn)
            beta = Scalar(twoK1) * Scalar::iPow(q - p) * factorialScalar(nn - p) *
                   factorialScalar(nn - q + 1);
        acc = acc + kernelHigh(p, q, alpha, beta);
    }
    // The boundary form phi_{2n+1} consists of the two extreme corner terms
    // only; doubling them is the unique weight that closes the ladder at
    // k = 2n, and no coclosedness constraint applies in this degree.
    if (k == 2 * nn + 1) acc = acc * Scalar(2);
    return acc;
}

Multiform KernelFactory::kernelReal(long k) const {
    const long nn = n();
    if (k < 0 || k > 2 * nn) throw std::domain_error("kernelReal requires 0 <= k <= 2n");
    return kernelRealAny(k);
}

}  // namespace crp
