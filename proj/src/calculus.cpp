#include "crpoisson/calculus.hpp"

#include <stdexcept>

namespace crp {

Calculus::Calculus(LieModel mdl) : model_(std::move(mdl)) {
    GeneratorTable g = model_.gens();
    const int count = g.count();
    const int dSign = model_.conv.dSign;

    // d(w*) = dSign * sum_{u<v} c[u][v][w] u* ^ v*.
    d1_.assign(static_cast<size_t>(count), MultiVec(count));
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v)
            for (const auto& [w, c] : model_.quotientBracket(u, v)) {
                Mask m = (Mask(1) << u) | (Mask(1) << v);
                d1_[static_cast<size_t>(w)].add(m, dSign > 0 ? c : -c);
            }

    // Coadjoint m-action on generator duals: m.u* = -sum_v <u | ad(m) v> v*.
    mDual_.assign(model_.mBasis.size(),
                  std::vector<MultiVec>(static_cast<size_t>(count), MultiVec(count)));
    for (size_t j = 0; j < model_.mBasis.size(); ++j)
        for (int v = 0; v < count; ++v)
            for (const auto& [w, c] : model_.mAct[j][static_cast<size_t>(v)])
                mDual_[j][static_cast<size_t>(w)].add(Mask(1) << v, -c);

    const int n = model_.n;
    basic_.Istar = Multiform::generatorDual(n, g.iGen());
    basic_.Zstar = Multiform::generatorDual(n, g.z());
    basic_.Zbarstar = Multiform::generatorDual(n, g.zbar());

    const Scalar i = Scalar::i();
    Multiform dI = d(basic_.Istar);
    Multiform dZ = d(basic_.Zstar);
    Multiform dZb = d(basic_.Zbarstar);
    StratumFilter f02;
    f02.bidegree = {0, 2};
    StratumFilter f11;
    f11.bidegree = {1, 1};
    StratumFilter fDelK;
    fDelK.bidegree = {2, 0};
    fDelK.kType = {1, 1};

    basic_.w02 = project(dI, f02) * Scalar::ratio(1, 2);
    basic_.w11 = project(dZ, f11) * Scalar::ratio(1, 2) -
                 wedge(basic_.Zstar, basic_.Istar) * i;
    basic_.w20 = project(dZb, fDelK) * (-i) + wedge(basic_.Zbarstar, basic_.Zstar) * i;
    basic_.w11bar = conjugate(basic_.w11);

    basic_.omegaK =
        (wedge(basic_.Zstar, basic_.Zbarstar) * i + basic_.w20) * Scalar::ratio(1, 2);
    Scalar volC = Scalar(Rational(1) / (Rational(mpz_class(1) << (n + 1)) * factorialRational(n)));
    basic_.volK = wedge(wedge(basic_.Zstar, basic_.Zbarstar) * i, wedgePow(basic_.w20, n)) * volC;
}

MultiVec Calculus::applyLegwise(const MultiVec& a, const std::vector<MultiVec>& table) const {
    MultiVec out(a.ngen);
    for (const auto& [m, c] : a.terms) {
        int pos = 0;
        Mask rest = m;
        while (rest) {
            int leg = std::countr_zero(rest);
            rest &= rest - 1;
            const MultiVec& repl = table[static_cast<size_t>(leg)];
            if (!repl.terms.empty()) {
                Scalar coeff = (pos & 1) ? -c : c;
                MultiVec partial = MultiVec::monomial(a.ngen, m & ~(Mask(1) << leg));
                MultiVec term = repl.wedge(partial);
                out += term * coeff;
            }
            ++pos;
        }
    }
    return out;
}

Multiform Calculus::d(const Multiform& a) const {
    if (checkInvariantInputs && !isInvariant(a))
        throw std::domain_error("d: bracket recipe applied to a non-invariant form");
    return Multiform(a.n, applyLegwise(a.v, d1_));
}

Multiform Calculus::dK(const Multiform& a) const {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        Stratum s = a.stratumOf(m);
        Multiform dm = d(Multiform::monomial(a.n, m, c));
        StratumFilter f;
        f.bidegree = {s.kDeg + 1, s.pDeg};
        out = out + project(dm, f);
    }
    return out;
}

Multiform Calculus::dP(const Multiform& a) const {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        Stratum s = a.stratumOf(m);
        Multiform dm = d(Multiform::monomial(a.n, m, c));
        StratumFilter f;
        f.bidegree = {s.kDeg, s.pDeg + 1};
        out = out + project(dm, f);
    }
    return out;
}

Multiform Calculus::delK(const Multiform& a) const {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        Stratum s = a.stratumOf(m);
        Multiform dm = d(Multiform::monomial(a.n, m, c));
        StratumFilter f;
        f.bidegree = {s.kDeg + 1, s.pDeg};
        f.kType = {s.kHol + 1, s.kAnti};
        out = out + project(dm, f);
    }
    return out;
}

Multiform Calculus::delKbar(const Multiform& a) const {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        Stratum s = a.stratumOf(m);
        Multiform dm = d(Multiform::monomial(a.n, m, c));
        StratumFilter f;
        f.bidegree = {s.kDeg + 1, s.pDeg};
        f.kType = {s.kHol, s.kAnti + 1};
        out = out + project(dm, f);
    }
    return out;
}

Multiform Calculus::pCodiff(const Multiform& a) const {
    GeneratorTable g = model_.gens();
    Multiform acc(a.n);
    for (int s = 1; s <= model_.n; ++s)
        acc = acc + insertGen(g.gAnti(s), insertGen(g.gHol(s), a));
    return wedge(basic_.Istar, acc);
}

Multiform Calculus::mActionOnForm(size_t j, const Multiform& a) const {
    return Multiform(a.n, applyLegwise(a.v, mDual_[j]));
}

bool Calculus::isInvariant(const Multiform& a) const {
    for (size_t j = 0; j < model_.mBasis.size(); ++j)
        if (!mActionOnForm(j, a).isZero()) return false;
    return true;
}

std::vector<Mask> Calculus::strataMonomials(const StratumFilter& f) const {
    GeneratorTable g = model_.gens();
    Multiform probe(model_.n);
    std::vector<Mask> out;
    const Mask top = Mask(1) << g.count();
    for (Mask m = 0; m < top; ++m)
        if (f.matches(probe.stratumOf(m))) out.push_back(m);
    return out;
}

std::vector<Multiform> Calculus::invariantSubspace(const StratumFilter& f) const {
    std::vector<Mask> mono = strataMonomials(f);
    if (mono.empty()) return {};

    // Intersect the kernels of the m-actions one at a time; the candidate
    // space collapses quickly, so later eliminations are nearly free.
    std::vector<Multiform> basis;
    basis.reserve(mono.size());
    for (Mask m : mono) basis.push_back(Multiform::monomial(model_.n, m));

    for (size_t j = 0; j < model_.mBasis.size() && !basis.empty(); ++j) {
        std::vector<Multiform> images;
        images.reserve(basis.size());
        std::map<Mask, int> rowIndex;
        for (const Multiform& b : basis) {
            Multiform img = mActionOnForm(j, b);
            for (const auto& [m, coeff] : img.v.terms)
                rowIndex.try_emplace(m, static_cast<int>(rowIndex.size()));
            images.push_back(std::move(img));
        }
        if (rowIndex.empty()) continue;  // action already vanishes on the span
        Matrix mat(static_cast<int>(rowIndex.size()), static_cast<int>(basis.size()));
        for (size_t c = 0; c < images.size(); ++c)
            for (const auto& [m, coeff] : images[c].v.terms)
                mat.at(rowIndex.at(m), static_cast<int>(c)) = coeff;
        std::vector<Multiform> next;
        for (const auto& x : nullspace(mat)) {
            Multiform b(model_.n);
            for (size_t c = 0; c < basis.size(); ++c)
                if (!x[c].isZero()) b = b + basis[c] * x[c];
            next.push_back(std::move(b));
        }
        basis = std::move(next);
    }
    return basis;
}

}  // namespace crp
