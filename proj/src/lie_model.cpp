#include "crpoisson/lie_model.hpp"

#include <stdexcept>

namespace crp {

Matrix unitMatrix(int N, int r, int c) {
    Matrix m(N, N);
    m.at(r, c) = Scalar(1);
    return m;
}

Scalar pairingB(const Matrix& x, const Matrix& y) { return (x * y).trace(); }

namespace {

std::vector<Scalar> vectorize(const Matrix& m) {
    return m.a;
}

}  // namespace

LieModel buildModel(int n, int maxRank, const ModelConventions& conv) {
    if (n < 1 || n > maxRank)
        throw std::out_of_range("rank n out of configured range [1, " + std::to_string(maxRank) +
                                "]");
    LieModel mdl;
    mdl.n = n;
    mdl.N = n + 2;
    mdl.conv = conv;
    const int N = mdl.N;
    GeneratorTable g(n);

    Matrix E(N, N);
    E.at(0, 0) = Scalar(1);
    E.at(N - 1, N - 1) = Scalar(-1);
    mdl.repE = E;

    mdl.rep.assign(static_cast<size_t>(g.count()), Matrix(N, N));
    mdl.rep[g.z()] = E * conv.zE + unitMatrix(N, 0, N - 1) * conv.zY;
    mdl.rep[g.zbar()] = E * conv.zE.conj() - unitMatrix(N, 0, N - 1) * conv.zY.conj();
    mdl.rep[g.iGen()] = (unitMatrix(N, N - 1, 0) + unitMatrix(N, 0, N - 1)) * conv.iC;
    for (int s = 1; s <= n; ++s) {
        Matrix fPlus = unitMatrix(N, s, N - 1) * conv.fSign;
        Matrix fMinus = unitMatrix(N, 0, s) * (-conv.fSign.conj());
        mdl.rep[g.fHol(s)] = conv.swapF ? fMinus : fPlus;
        mdl.rep[g.fAnti(s)] = conv.swapF ? fPlus : fMinus;
        Matrix gPlus = (unitMatrix(N, s, 0) + unitMatrix(N, s, N - 1)) * conv.gSign;
        Matrix gMinus = (unitMatrix(N, N - 1, s) + unitMatrix(N, 0, s)) * (-conv.gSign.conj());
        mdl.rep[g.gHol(s)] = conv.swapG ? gMinus : gPlus;
        mdl.rep[g.gAnti(s)] = conv.swapG ? gPlus : gMinus;
    }

    // m_C basis: traceless-corner diagonal elements and the off-diagonal block.
    for (int s = 1; s <= n; ++s) {
        Matrix m = unitMatrix(N, s, s);
        m.at(0, 0) = Scalar::ratio(-1, 2);
        m.at(N - 1, N - 1) = Scalar::ratio(-1, 2);
        mdl.mBasis.push_back(m);
    }
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
            if (s != t) mdl.mBasis.push_back(unitMatrix(N, s, t));

    // Decomposition solver: columns are the vectorized generator and m-basis
    // representatives; row-reduce once with a transformation block.
    const int K = g.count() + static_cast<int>(mdl.mBasis.size());
    Matrix aug(N * N, K + N * N);
    for (int c = 0; c < g.count(); ++c) {
        std::vector<Scalar> col = vectorize(mdl.rep[static_cast<size_t>(c)]);
        for (int r = 0; r < N * N; ++r) aug.at(r, c) = col[static_cast<size_t>(r)];
    }
    for (size_t j = 0; j < mdl.mBasis.size(); ++j) {
        std::vector<Scalar> col = vectorize(mdl.mBasis[j]);
        for (int r = 0; r < N * N; ++r) aug.at(r, g.count() + static_cast<int>(j)) =
            col[static_cast<size_t>(r)];
    }
    for (int r = 0; r < N * N; ++r) aug.at(r, K + r) = Scalar(1);
    std::vector<int> pivots = rowReduce(aug);
    std::vector<int> colPivots;
    for (int p : pivots)
        if (p < K) colPivots.push_back(p);
    if (static_cast<int>(colPivots.size()) != K)
        throw std::logic_error("generator representatives are linearly dependent");
    mdl.decompSolver_ = aug;
    mdl.solverPivots_ = colPivots;

    auto decomposeNow = [&](const Matrix& x) { return mdl.decompose(x); };

    // Quotient structure constants for all generator pairs.
    mdl.qb.assign(static_cast<size_t>(g.count()),
                  std::vector<GenCombo>(static_cast<size_t>(g.count())));
    for (int u = 0; u < g.count(); ++u)
        for (int v = u + 1; v < g.count(); ++v) {
            Matrix br = mdl.rep[static_cast<size_t>(u)].commutator(mdl.rep[static_cast<size_t>(v)]);
            LieModel::Decomposition d = decomposeNow(br);
            GenCombo combo;
            for (int w = 0; w < g.count(); ++w)
                if (!d.gen[static_cast<size_t>(w)].isZero())
                    combo.emplace_back(w, d.gen[static_cast<size_t>(w)]);
            mdl.qb[static_cast<size_t>(u)][static_cast<size_t>(v)] = combo;
            GenCombo neg;
            for (auto& [w, c] : combo) neg.emplace_back(w, -c);
            mdl.qb[static_cast<size_t>(v)][static_cast<size_t>(u)] = neg;
        }

    // Adjoint m-action on the generator basis (no m-part can appear).
    mdl.mAct.assign(mdl.mBasis.size(), std::vector<GenCombo>(static_cast<size_t>(g.count())));
    for (size_t j = 0; j < mdl.mBasis.size(); ++j)
        for (int u = 0; u < g.count(); ++u) {
            Matrix br = mdl.mBasis[j].commutator(mdl.rep[static_cast<size_t>(u)]);
            LieModel::Decomposition d = decomposeNow(br);
            if (!d.mPart.isZero())
                throw std::logic_error("m-action leaked an m-part; grading violated");
            GenCombo combo;
            for (int w = 0; w < g.count(); ++w)
                if (!d.gen[static_cast<size_t>(w)].isZero())
                    combo.emplace_back(w, d.gen[static_cast<size_t>(w)]);
            mdl.mAct[j][static_cast<size_t>(u)] = combo;
        }

    return mdl;
}

LieModel::Decomposition LieModel::decompose(const Matrix& x) const {
    GeneratorTable g(n);
    const int K = g.count() + static_cast<int>(mBasis.size());
    std::vector<Scalar> b = x.a;
    // Apply the stored transformation block to b, read pivot rows.
    std::vector<Scalar> coeff(static_cast<size_t>(K));
    const int total = N * N;
    for (int r = 0; r < total; ++r) {
        Scalar y;
        for (int c = 0; c < total; ++c) {
            const Scalar& t = decompSolver_.at(r, K + c);
            if (!t.isZero() && !b[static_cast<size_t>(c)].isZero())
                y += t * b[static_cast<size_t>(c)];
        }
        if (r < static_cast<int>(solverPivots_.size())) {
            coeff[static_cast<size_t>(solverPivots_[static_cast<size_t>(r)])] = y;
        } else if (!y.isZero()) {
            throw std::logic_error("matrix does not lie in span(generators) + m_C");
        }
    }
    Decomposition out;
    out.gen.assign(coeff.begin(), coeff.begin() + g.count());
    Matrix m(N, N);
    for (size_t j = 0; j < mBasis.size(); ++j) {
        const Scalar& c = coeff[static_cast<size_t>(g.count()) + j];
        if (!c.isZero()) m = m + mBasis[j] * c;
    }
    out.mPart = m;
    return out;
}

Matrix LieModel::elementMatrix(const GenCombo& c) const {
    Matrix m(N, N);
    for (const auto& [w, coeff] : c) m = m + rep[static_cast<size_t>(w)] * coeff;
    return m;
}

GenCombo LieModel::quotientBracket(int u, int v) const {
    return qb[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

GenCombo LieModel::quotientBracket(const GenCombo& a, const GenCombo& b) const {
    GeneratorTable g(n);
    std::vector<Scalar> acc(static_cast<size_t>(g.count()));
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            if (u == v) continue;
            for (const auto& [w, cw] : qb[static_cast<size_t>(u)][static_cast<size_t>(v)])
                acc[static_cast<size_t>(w)] += cu * cv * cw;
        }
    GenCombo out;
    for (int w = 0; w < g.count(); ++w)
        if (!acc[static_cast<size_t>(w)].isZero()) out.emplace_back(w, acc[static_cast<size_t>(w)]);
    return out;
}

std::vector<Scalar> LieModel::vecGen(int g) const {
    std::vector<Scalar> v(static_cast<size_t>(gens().count()));
    v[static_cast<size_t>(g)] = Scalar(1);
    return v;
}

std::vector<Scalar> LieModel::vecFHol(const std::vector<Scalar>& x) const {
    GeneratorTable g(n);
    std::vector<Scalar> v(static_cast<size_t>(g.count()));
    for (int s = 1; s <= n; ++s) v[static_cast<size_t>(g.fHol(s))] = x[static_cast<size_t>(s - 1)];
    return v;
}

std::vector<Scalar> LieModel::vecFAnti(const std::vector<Scalar>& x) const {
    GeneratorTable g(n);
    std::vector<Scalar> v(static_cast<size_t>(g.count()));
    for (int s = 1; s <= n; ++s)
        v[static_cast<size_t>(g.fAnti(s))] = x[static_cast<size_t>(s - 1)].conj();
    return v;
}

std::vector<Scalar> LieModel::vecGHol(const std::vector<Scalar>& x) const {
    GeneratorTable g(n);
    std::vector<Scalar> v(static_cast<size_t>(g.count()));
    for (int s = 1; s <= n; ++s) v[static_cast<size_t>(g.gHol(s))] = x[static_cast<size_t>(s - 1)];
    return v;
}

std::vector<Scalar> LieModel::vecGAnti(const std::vector<Scalar>& x) const {
    GeneratorTable g(n);
    std::vector<Scalar> v(static_cast<size_t>(g.count()));
    for (int s = 1; s <= n; ++s)
        v[static_cast<size_t>(g.gAnti(s))] = x[static_cast<size_t>(s - 1)].conj();
    return v;
}

}  // namespace crp
