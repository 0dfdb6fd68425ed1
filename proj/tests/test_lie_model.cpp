#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crpoisson/calculus.hpp"
#include "crpoisson/checks.hpp"

using namespace crp;

namespace {

// Real-form membership: xi* S + S xi = 0 with S the fixed Hermitian matrix.
bool inRealForm(const Matrix& xi) {
    const int N = xi.rows;
    Matrix S(N, N);
    S.at(0, N - 1) = Scalar(1);
    S.at(N - 1, 0) = Scalar(1);
    for (int i = 1; i < N - 1; ++i) S.at(i, i) = Scalar(1);
    return (xi.conjTranspose() * S + S * xi).isZero() && xi.trace().isZero();
}

}  // namespace

TEST_CASE("buildModel dimensions and configuration errors") {
    for (int n = 1; n <= 3; ++n) {
        LieModel m = buildModel(n);
        CHECK(static_cast<int>(m.rep.size()) == 4 * n + 3);
        CHECK(static_cast<int>(m.mBasis.size()) == n * n);
        GeneratorTable g = m.gens();
        int kCount = 0, pCount = 0;
        for (int u = 0; u < g.count(); ++u)
            (g.factor(u) == Factor::KHorizontal ? kCount : pCount)++;
        CHECK(kCount == 2 * n + 2);
        CHECK(pCount == 2 * n + 1);
    }
    CHECK_THROWS_AS(buildModel(0), std::out_of_range);
    CHECK_THROWS_AS(buildModel(5), std::out_of_range);
    CHECK_NOTHROW(buildModel(4));
}

TEST_CASE("representatives are traceless with trivial m-part; real combos lie in su(n+1,1)") {
    LieModel m = buildModel(2);
    GeneratorTable g = m.gens();
    for (int u = 0; u < g.count(); ++u) {
        CHECK(m.rep[static_cast<size_t>(u)].trace().isZero());
        LieModel::Decomposition d = m.decompose(m.rep[static_cast<size_t>(u)]);
        CHECK(d.mPart.isZero());
        for (int w = 0; w < g.count(); ++w)
            CHECK(d.gen[static_cast<size_t>(w)] == (w == u ? Scalar(1) : Scalar(0)));
    }
    // Real elements: I, Z + Zbar, i(Z - Zbar), G_s^{1,0} + G_s^{0,1}, F sums.
    CHECK(inRealForm(m.rep[g.iGen()]));
    CHECK(inRealForm(m.rep[g.z()] + m.rep[g.zbar()]));
    CHECK(inRealForm((m.rep[g.z()] - m.rep[g.zbar()]) * Scalar::i()));
    for (int s = 1; s <= m.n; ++s) {
        CHECK(inRealForm(m.rep[g.gHol(s)] + m.rep[g.gAnti(s)]));
        CHECK(inRealForm(m.rep[g.fHol(s)] + m.rep[g.fAnti(s)]));
    }
}

TEST_CASE("round trip through the matrix realization") {
    LieModel m = buildModel(2);
    SplitMix rng(3);
    GeneratorTable g = m.gens();
    for (int t = 0; t < 20; ++t) {
        GenCombo combo;
        for (int u = 0; u < g.count(); ++u)
            if (rng.range(0, 2) == 0) combo.emplace_back(u, randomScalar(rng));
        LieModel::Decomposition d = m.decompose(m.elementMatrix(combo));
        CHECK(d.mPart.isZero());
        std::vector<Scalar> expect(static_cast<size_t>(g.count()));
        for (const auto& [u, c] : combo) expect[static_cast<size_t>(u)] = c;
        CHECK(d.gen == expect);
    }
}

TEST_CASE("full graded-coordinate round trip including the m-part") {
    LieModel m = buildModel(2);
    SplitMix rng(13);
    const int N = m.N;
    for (int t = 0; t < 15; ++t) {
        // random traceless matrix over Q(i)
        Matrix x(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) x.at(i, j) = randomScalar(rng);
        Scalar tr = x.trace();
        x.at(N - 1, N - 1) -= tr;
        LieModel::Decomposition d = m.decompose(x);
        Matrix rebuilt = d.mPart;
        for (size_t u = 0; u < m.rep.size(); ++u)
            rebuilt = rebuilt + m.rep[u] * d.gen[u];
        CHECK(rebuilt == x);
    }
}

TEST_CASE("quotient bracket agrees with the matrix oracle and is antisymmetric") {
    LieModel m = buildModel(2);
    GeneratorTable g = m.gens();
    for (int u = 0; u < g.count(); ++u)
        for (int v = 0; v < g.count(); ++v) {
            Matrix br = m.rep[static_cast<size_t>(u)].commutator(m.rep[static_cast<size_t>(v)]);
            LieModel::Decomposition d = m.decompose(br);
            const GenCombo& combo = u == v ? GenCombo{} : m.quotientBracket(u, v);
            std::vector<Scalar> expect(static_cast<size_t>(g.count()));
            for (const auto& [w, c] : combo) expect[static_cast<size_t>(w)] = c;
            CHECK(d.gen == expect);
        }
    // degenerate brackets
    CHECK(m.quotientBracket(g.iGen(), g.iGen()).empty());
    GenCombo eClass = {{g.z(), Scalar(1)}, {g.zbar(), Scalar(1)}};
    CHECK(m.quotientBracket(eClass, eClass).empty());
    // [Z, Zbar] regression constant, pinned from the matrix oracle.
    GenCombo zzbar = m.quotientBracket(g.z(), g.zbar());
    GenCombo pinned = {{g.z(), Scalar(-1)}, {g.zbar(), Scalar(1)}};
    CHECK(zzbar == pinned);
}

TEST_CASE("normalized invariant form: trace form equals Killing/2(n+2)") {
    // Killing oracle: tr(ad X ad Y) over a basis of sl(N).
    const int n = 1;
    LieModel m = buildModel(n);
    const int N = m.N;
    std::vector<Matrix> basis;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            basis.push_back(unitMatrix(N, i, j));
        }
    for (int i = 1; i < N; ++i) {
        Matrix h(N, N);
        h.at(0, 0) = Scalar(1);
        h.at(i, i) = Scalar(-1);
        basis.push_back(h);
    }
    const int dim = static_cast<int>(basis.size());
    // Expand [x, e_k] in the basis exactly.
    Matrix gram(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) gram.at(a, b) = pairingB(basis[a], basis[b]);
    auto adMatrix = [&](const Matrix& x) {
        Matrix ad(dim, dim);
        for (int k = 0; k < dim; ++k) {
            Matrix img = x.commutator(basis[static_cast<size_t>(k)]);
            // solve coordinates via the pairing gram (nondegenerate)
            std::vector<Scalar> rhs(static_cast<size_t>(dim));
            for (int a = 0; a < dim; ++a) rhs[static_cast<size_t>(a)] = pairingB(basis[a], img);
            bool ok = false;
            std::vector<Scalar> x2 = solveLinear(gram, rhs, ok);
            REQUIRE(ok);
            for (int a = 0; a < dim; ++a) ad.at(a, k) = x2[static_cast<size_t>(a)];
        }
        return ad;
    };
    SplitMix rng(5);
    for (int t = 0; t < 4; ++t) {
        Matrix x = basis[static_cast<size_t>(rng.range(0, dim - 1))];
        Matrix y = basis[static_cast<size_t>(rng.range(0, dim - 1))];
        Scalar killing = (adMatrix(x) * adMatrix(y)).trace();
        CHECK(killing == pairingB(x, y) * Scalar(2 * (n + 2)));
    }
}

TEST_CASE("pairing table examples and invariance") {
    LieModel m = buildModel(2);
    GeneratorTable g = m.gens();
    CHECK(pairingB(m.repE, m.repE) == Scalar(2));
    // B(xi_{e_1}, eta_{e_1}) = -2
    const int N = m.N;
    Matrix xi(N, N), eta(N, N);
    xi.at(1, 0) = Scalar(1);
    xi.at(N - 1, 1) = Scalar(-1);
    eta.at(0, 1) = Scalar(-1);
    eta.at(1, N - 1) = Scalar(1);
    CHECK(pairingB(xi, eta) == Scalar(-2));
    // g_1 x g_1 pairs to zero
    CHECK(pairingB(m.rep[g.fHol(1)], m.rep[g.fHol(2)]).isZero());
    CHECK(pairingB(m.rep[g.fHol(1)], m.rep[g.fAnti(1)]).isZero());
    // invariance B([x,u],v) + B(u,[x,v]) = 0
    SplitMix rng(7);
    for (int t = 0; t < 10; ++t) {
        const Matrix& x = m.rep[static_cast<size_t>(rng.range(0, g.count() - 1))];
        const Matrix& u = m.rep[static_cast<size_t>(rng.range(0, g.count() - 1))];
        const Matrix& v = m.rep[static_cast<size_t>(rng.range(0, g.count() - 1))];
        CHECK((pairingB(x.commutator(u), v) + pairingB(u, x.commutator(v))).isZero());
    }
}

TEST_CASE("m-action on forms: invariants and non-invariants") {
    Calculus cal(buildModel(2));
    const LieModel& m = cal.model();
    GeneratorTable g = m.gens();
    for (size_t j = 0; j < m.mBasis.size(); ++j) {
        CHECK(cal.mActionOnForm(j, cal.basic().Istar).isZero());
        CHECK(cal.mActionOnForm(j, cal.basic().w20).isZero());
    }
    // a single F-dual is not invariant: the diagonal m-element acts by a
    // nonzero multiple inside the F-duals
    Multiform fdual = Multiform::generatorDual(m.n, g.fHol(1));
    Multiform acted = cal.mActionOnForm(0, fdual);
    CHECK(!acted.isZero());
    StratumFilter f;
    f.bidegree = {1, 0};
    CHECK(project(acted, f) == acted);
    // derivation over wedge
    SplitMix rng(9);
    for (int t = 0; t < 10; ++t) {
        Multiform a = randomForm(rng, m.n, 3), b = randomForm(rng, m.n, 3);
        CHECK(cal.mActionOnForm(1, wedge(a, b)) ==
              wedge(cal.mActionOnForm(1, a), b) + wedge(a, cal.mActionOnForm(1, b)));
    }
}
