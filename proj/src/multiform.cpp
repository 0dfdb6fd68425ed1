#include "crpoisson/multiform.hpp"

#include <algorithm>
#include <sstream>

namespace crp {

Stratum Multiform::stratumOf(Mask m) const {
    GeneratorTable g = gens();
    Stratum s;
    s.kDeg = std::popcount(m & g.kMask());
    s.pDeg = std::popcount(m & g.pMask());
    s.kHol = std::popcount(m & g.kHolMask());
    s.kAnti = std::popcount(m & g.kAntiMask());
    s.gHol = std::popcount(m & g.gHolMask());
    s.gAnti = std::popcount(m & g.gAntiMask());
    s.hasI = (m & g.iMask()) != 0;
    return s;
}

void requireSameRank(const Multiform& a, const Multiform& b) {
    if (a.n != b.n) throw std::invalid_argument("model mismatch: forms have different ranks");
}

Multiform wedge(const Multiform& a, const Multiform& b) {
    requireSameRank(a, b);
    return Multiform(a.n, a.v.wedge(b.v));
}

Multiform wedgePow(const Multiform& a, int k) {
    if (k < 0) throw std::invalid_argument("negative wedge power");
    Multiform acc = Multiform::one(a.n);
    for (int j = 0; j < k; ++j) acc = wedge(acc, a);
    return acc;
}

Multiform insert(const std::vector<Scalar>& coeffs, const Multiform& a) {
    if (coeffs.size() != static_cast<size_t>(a.v.ngen))
        throw std::invalid_argument("insert: coefficient vector has wrong length");
    return Multiform(a.n, a.v.insert(coeffs));
}

Multiform insertGen(int g, const Multiform& a) {
    return Multiform(a.n, a.v.insertBasis(g));
}

Multiform project(const Multiform& a, const StratumFilter& f) {
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms)
        if (f.matches(a.stratumOf(m))) out.v.terms.emplace(m, c);
    return out;
}

Multiform conjugate(const Multiform& a) {
    GeneratorTable g = a.gens();
    Multiform out(a.n);
    for (const auto& [m, c] : a.v.terms) {
        // Map each leg through the conjugation partner, then count the
        // inversions of the mapped leg list to re-sort.
        std::vector<int> legs;
        Mask rest = m;
        while (rest) {
            int k = std::countr_zero(rest);
            rest &= rest - 1;
            legs.push_back(g.partner(k));
        }
        int inversions = 0;
        for (size_t i = 0; i < legs.size(); ++i)
            for (size_t j = i + 1; j < legs.size(); ++j)
                if (legs[i] > legs[j]) ++inversions;
        Mask mapped = 0;
        for (int leg : legs) mapped |= Mask(1) << leg;
        Scalar c2 = c.conj();
        if (inversions & 1) c2 = -c2;
        out.v.add(mapped, c2);
    }
    return out;
}

std::string serializeMultiform(const Multiform& a) {
    GeneratorTable g = a.gens();
    std::vector<Mask> masks;
    masks.reserve(a.v.terms.size());
    for (const auto& [m, c] : a.v.terms) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](Mask x, Mask y) {
        int dx = std::popcount(x), dy = std::popcount(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    std::ostringstream os;
    if (masks.empty()) return "0";
    bool first = true;
    for (Mask m : masks) {
        if (!first) os << " ; ";
        first = false;
        if (m == 0) {
            os << "1";
        } else {
            Mask rest = m;
            bool fg = true;
            while (rest) {
                int k = std::countr_zero(rest);
                rest &= rest - 1;
                if (!fg) os << "^";
                fg = false;
                os << g.name(k);
            }
        }
        const Scalar& c = a.v.coeff(m);
        os << " , " << c.re.get_str() << " , " << c.im.get_str();
    }
    return os.str();
}

}  // namespace crp
