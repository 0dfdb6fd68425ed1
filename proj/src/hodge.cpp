#include "crpoisson/hodge.hpp"

#include <stdexcept>

namespace crp {

Hodge::Hodge(const Calculus& cal) : cal_(&cal) {
    GeneratorTable g = cal.model().gens();
    kMask_ = g.kMask();
    pMaskBits_ = g.pMask();
    const Multiform& vol = cal.basic().volK;
    if (vol.v.terms.size() != 1) throw std::logic_error("vol_K is not a single monomial");
    topK_ = vol.v.terms.begin()->first;
    volCoeff_ = vol.v.terms.begin()->second;
    if (topK_ != kMask_) throw std::logic_error("vol_K does not span the top K-stratum");
}

Scalar Hodge::degreeOnePairing(int g) const {
    GeneratorTable t = cal_->model().gens();
    if (t.factor(g) != Factor::KHorizontal) return Scalar(0);
    return (g == t.z() || g == t.zbar()) ? Scalar(2) : Scalar(4);
}

Scalar Hodge::gramMonomial(Mask a, Mask b) const {
    GeneratorTable t = cal_->model().gens();
    if (std::popcount(a) != std::popcount(b)) return Scalar(0);
    // The degree-1 pairing matches each leg with exactly one partner, so the
    // Gram determinant is a signed product or zero.
    Mask partners = 0;
    std::vector<int> mapped;
    Scalar prod(1);
    Mask rest = a;
    while (rest) {
        int leg = std::countr_zero(rest);
        rest &= rest - 1;
        int p = t.partner(leg);
        partners |= Mask(1) << p;
        mapped.push_back(p);
        prod *= degreeOnePairing(leg);
    }
    if (partners != b) return Scalar(0);
    int inversions = 0;
    for (size_t i = 0; i < mapped.size(); ++i)
        for (size_t j = i + 1; j < mapped.size(); ++j)
            if (mapped[i] > mapped[j]) ++inversions;
    return (inversions & 1) ? -prod : prod;
}

Scalar Hodge::pairingK(const Multiform& a, const Multiform& b) const {
    Scalar acc;
    for (const auto& [ma, ca] : a.v.terms) {
        if (ma & pMaskBits_) throw std::invalid_argument("pairingK: form has P legs");
        for (const auto& [mb, cb] : b.v.terms) {
            Scalar g = gramMonomial(ma, mb);
            if (!g.isZero()) acc += ca * cb * g;
        }
    }
    return acc;
}

std::pair<Mask, Scalar> Hodge::starMonomial(Mask m) const {
    GeneratorTable t = cal_->model().gens();
    Mask kappa = m & kMask_;
    Mask pPart = m & pMaskBits_;
    Mask alpha = 0;
    Mask rest = kappa;
    while (rest) {
        int leg = std::countr_zero(rest);
        rest &= rest - 1;
        alpha |= Mask(1) << t.partner(leg);
    }
    Mask mu = kMask_ & ~alpha;
    Scalar val = gramMonomial(alpha, kappa) * volCoeff_;
    if (MultiVec::wedgeSign(alpha, mu) < 0) val = -val;
    return {mu | pPart, val};
}

Multiform Hodge::starK(const Multiform& a) const {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        auto [mask, coeff] = starMonomial(m);
        out.v.add(mask, c * coeff);
    }
    return out;
}

Multiform Hodge::deltaK(const Multiform& a) const {
    return -starK(cal_->dK(starK(a)));
}

Multiform Hodge::delStarK(const Multiform& a) const {
    return -starK(cal_->delKbar(starK(a)));
}

Multiform Hodge::delBarStarK(const Multiform& a) const {
    return -starK(cal_->delK(starK(a)));
}

Multiform Hodge::laplaceK(const Multiform& a) const {
    return cal_->dK(deltaK(a)) + deltaK(cal_->dK(a));
}

Multiform Hodge::lefschetzK(const Multiform& a) const {
    return wedge(cal_->basic().omegaK, a);
}

Multiform Hodge::lefschetzKAdjSandwich(const Multiform& a) const {
    return -starK(lefschetzK(starK(a)));
}

Multiform Hodge::lefschetzKAdj(const Multiform& a) const {
    GeneratorTable g = cal_->model().gens();
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        int kdeg = std::popcount(m & g.kMask());
        Multiform piece = starK(lefschetzK(starK(Multiform::monomial(a.n, m, c))));
        out = out + (kdeg % 2 == 0 ? piece : -piece);
    }
    return out;
}

Scalar Hodge::starSquareSign(int p, int q) const {
    StratumFilter f;
    f.kType = {p, q};
    f.pType = {0, 0};
    f.hasI = false;
    std::vector<Mask> monos = cal_->strataMonomials(f);
    if (monos.empty()) throw std::domain_error("empty K-type stratum");
    Scalar sign;
    bool first = true;
    for (Mask m : monos) {
        Multiform mono = Multiform::monomial(cal_->n(), m);
        Multiform ss = starK(starK(mono));
        if (ss.v.terms.size() != 1 || ss.v.terms.begin()->first != m)
            throw std::logic_error("star square is not diagonal on the stratum");
        Scalar s = ss.v.terms.begin()->second;
        if (first) {
            sign = s;
            first = false;
        } else if (s != sign) {
            throw std::logic_error("star square sign varies inside a stratum");
        }
    }
    return sign;
}

}  // namespace crp
