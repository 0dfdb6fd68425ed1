#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crpoisson/checks.hpp"

using namespace crp;

TEST_CASE("kappa values, support and recursion up to n = 4") {
    CHECK(KernelFactory::kappa(1, 1, 2, 1) == 2);
    CHECK(KernelFactory::kappa(1, 1, 2, -1) == 0);
    CHECK(KernelFactory::kappa(2, 1, 3, 5) == 0);
    for (long n = 1; n <= 4; ++n)
        for (long p = 0; p <= n; ++p)
            for (long q = 0; q <= n; ++q)
                for (long k = std::max(p, q); k <= std::min(p, q) + n; ++k)
                    for (long j = -2; j <= std::min(p, q) + 2; ++j)
                        CHECK(KernelFactory::kappa(p, q, k, j) * (p - j) * (q - j) ==
                              KernelFactory::kappa(p, q, k, j + 1) * (j + 1) *
                                  (k - (p + q) + j + 1));
}

TEST_CASE("omega family: examples, census, domain errors") {
    Calculus cal(buildModel(2));
    KernelFactory kf(cal);
    CHECK(kf.omegaJ(0, 0, 0, 0) == Multiform::one(2));
    CHECK(kf.omegaJ(0, 0, 1, 0) == cal.basic().w02);
    CHECK_THROWS_AS(kf.omegaJ(0, 0, 3, 0), std::domain_error);  // k - p > n
    CHECK_THROWS_AS(kf.omegaJ(1, 1, 1, 0), std::domain_error);  // j below max{0,p+q-k}
    Multiform w = kf.omegaJ(2, 1, 2, 1);
    StratumFilter f;
    f.bidegree = {3, 1};
    f.kType = {2, 1};
    f.pType = {0, 1};
    f.hasI = false;
    CHECK(project(w, f) == w);
    CHECK(!w.isZero());
    GeneratorTable g(2);
    for (int a : {g.z(), g.zbar(), g.iGen()}) CHECK(insertGen(a, w).isZero());
    // wedge(w11, w11) at n = 1 is zero (single monomial squared)
    Calculus cal1(buildModel(1));
    CHECK(cal1.basic().w11.v.terms.size() == 1);
    CHECK(wedge(cal1.basic().w11, cal1.basic().w11).isZero());
}

TEST_CASE("pi and tilde-pi families: exactness, closedness, reductions") {
    for (int n : {1, 2}) {
        Calculus cal(buildModel(n));
        KernelFactory kf(cal);
        const BasicForms& b = cal.basic();
        for (long p = 0; p <= n; ++p)
            for (long q = 0; q <= n; ++q)
                for (long j = 0; j <= std::min(p, q); ++j) {
                    if (p + q > n) continue;
                    // d_P(I* ^ pi^{p,q;n}_j) = pi^{p,q;n+1}_j
                    CHECK(cal.dP(wedge(b.Istar, kf.piJ(p, q, n, j))) ==
                          kf.piJTotal(p, q, n + 1, j));
                    // I* ^ pi_j^{p,q;k} = 2^k I* ^ omega_j^{p,q;k}
                    for (long k = p + q; k <= n; ++k)
                        CHECK(wedge(b.Istar, kf.piJTotal(p, q, k, j)) ==
                              wedge(b.Istar, kf.omegaJTotal(p, q, k, j)) *
                                  Scalar(Rational(mpz_class(1) << k)));
                }
        // tilde-pi is d_P closed
        for (long p = 0; p <= n; ++p)
            for (long q = 0; q <= n; ++q)
                for (long k = std::max(p, q); k <= std::min(p, q) + n; ++k)
                    for (long j = std::max(0L, p + q - k); j <= std::min(p, q); ++j)
                        CHECK(cal.dP(kf.tildePiJ(p, q, k, j)).isZero());
        // eq. (tech1): I* ^ tpi_j^{p,q;n+1} = 2^{n+1} I* ^ (w_j^{p,q;n+1}
        //   + i j Z* ^ Zbar* ^ w_{j-1}^{p-1,q-1;n})
        Scalar twoN1 = Scalar(Rational(mpz_class(1) << (n + 1)));
        Multiform zz = wedge(b.Zstar, b.Zbarstar);
        for (long p = 0; p <= n; ++p)
            for (long q = 0; q <= n; ++q)
                for (long j = std::max(0L, p + q - n - 1); j <= std::min(p, q); ++j) {
                    Multiform lhs = wedge(b.Istar, kf.tildePiJTotal(p, q, n + 1, j));
                    Multiform rhs =
                        wedge(b.Istar, kf.omegaJTotal(p, q, n + 1, j) +
                                           wedge(zz, kf.omegaJTotal(p - 1, q - 1, n, j - 1)) *
                                               (Scalar::i() * Scalar(j))) *
                        twoN1;
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("low kernels: construction, conditions, domain errors") {
    Calculus cal(buildModel(1));
    Hodge h(cal);
    KernelFactory kf(cal);
    const BasicForms& b = cal.basic();
    // phi_{0,0} = I* ^ pi_0^{0,0;1} = 2 I* ^ w02 at n = 1
    CHECK(kf.kernelLow(0, 0) == wedge(b.Istar, kf.piJ(0, 0, 1, 0)));
    CHECK(kf.kernelLow(0, 0) == wedge(b.Istar, b.w02) * Scalar(2));
    CHECK_THROWS_AS(kf.kernelLow(1, 1), std::domain_error);
    Calculus cal2(buildModel(2));
    Hodge h2(cal2);
    KernelFactory kf2(cal2);
    CHECK(cal2.pCodiff(kf2.kernelLow(1, 1)).isZero());
    CHECK(h2.lefschetzKAdj(kf2.kernelLow(1, 0)).isZero());
}

TEST_CASE("high kernels: linearity, conditions, domain errors") {
    Calculus cal(buildModel(2));
    KernelFactory kf(cal);
    CHECK(kf.kernelHigh(2, 1, Scalar(0), Scalar(0)).isZero());
    CHECK_THROWS_AS(kf.kernelHigh(1, 1, Scalar(1), Scalar(0)), std::domain_error);
    Scalar a(2), b(Rational(0), Rational(3));
    Multiform lin = kf.kernelHigh(2, 1, a, b);
    CHECK(lin == kf.kernelHigh(2, 1, Scalar(1), Scalar(0)) * a +
                     kf.kernelHigh(2, 1, Scalar(0), Scalar(1)) * b);
    CHECK(cal.pCodiff(cal.dP(lin)).isZero());
}

TEST_CASE("real kernels: range, ladder constants, reality") {
    Calculus cal(buildModel(2));
    KernelFactory kf(cal);
    CHECK(kf.ladderConstant(2) == 1);   // c_n = 1
    CHECK(kf.ladderConstant(3) == -2);  // c_{n+1} = -2
    CHECK_THROWS_AS(kf.kernelReal(5), std::domain_error);
    CHECK_THROWS_AS(kf.kernelReal(-1), std::domain_error);
    CHECK_NOTHROW(kf.kernelRealAny(5));
    for (long k = 0; k <= 4; ++k) {
        Multiform phi = kf.kernelReal(k);
        CHECK(conjugate(phi) == phi);
        CHECK(!phi.isZero());
    }
}
