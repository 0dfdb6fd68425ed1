#pragma once

#include <bit>
#include <map>
#include <optional>
#include <vector>

#include "crpoisson/generators.hpp"
#include "crpoisson/scalar.hpp"

namespace crp {

/// Sparse element of the exterior algebra on `ngen` anticommuting generators.
/// Monomials are bitmasks over generator indices in strictly increasing order;
/// zero coefficients are dropped eagerly so equality is structural.
struct MultiVec {
    int ngen = 0;
    std::map<Mask, Scalar> terms;

    MultiVec() = default;
    explicit MultiVec(int generators) : ngen(generators) {}

    static MultiVec monomial(int generators, Mask m, Scalar c = Scalar(1)) {
        MultiVec v(generators);
        if (!c.isZero()) v.terms.emplace(m, std::move(c));
        return v;
    }
    static MultiVec one(int generators) { return monomial(generators, 0); }

    bool isZero() const { return terms.empty(); }

    /// Koszul sign of sorting the concatenation a|b (masks must be disjoint):
    /// parity of #{(i, j) : i in a, j in b, i > j}.
    static int wedgeSign(Mask a, Mask b) {
        int inversions = 0;
        Mask rest = a;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            inversions += std::popcount(b & ((Mask(1) << i) - 1));
        }
        return (inversions & 1) ? -1 : 1;
    }

    void add(Mask m, const Scalar& c) {
        if (c.isZero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.isZero()) terms.erase(it);
        }
    }

    MultiVec& operator+=(const MultiVec& o) {
        for (const auto& [m, c] : o.terms) add(m, c);
        return *this;
    }
    MultiVec& operator-=(const MultiVec& o) {
        for (const auto& [m, c] : o.terms) add(m, -c);
        return *this;
    }
    friend MultiVec operator+(MultiVec a, const MultiVec& b) { return a += b; }
    friend MultiVec operator-(MultiVec a, const MultiVec& b) { return a -= b; }

    MultiVec operator*(const Scalar& c) const {
        MultiVec out(ngen);
        if (c.isZero()) return out;
        for (const auto& [m, v] : terms) out.terms.emplace(m, v * c);
        return out;
    }
    MultiVec operator-() const { return *this * Scalar(-1); }

    MultiVec wedge(const MultiVec& o) const {
        MultiVec out(ngen);
        for (const auto& [ma, ca] : terms)
            for (const auto& [mb, cb] : o.terms) {
                if (ma & mb) continue;
                Scalar c = ca * cb;
                if (wedgeSign(ma, mb) < 0) c = -c;
                out.add(ma | mb, c);
            }
        return out;
    }

    /// Insertion of the basis vector dual to generator g.
    MultiVec insertBasis(int g) const {
        MultiVec out(ngen);
        Mask bit = Mask(1) << g;
        for (const auto& [m, c] : terms) {
            if (!(m & bit)) continue;
            int below = std::popcount(m & (bit - 1));
            out.add(m & ~bit, (below & 1) ? -c : c);
        }
        return out;
    }

    /// Insertion of a vector whose pairing with generator g is pairings[g].
    MultiVec insert(const std::vector<Scalar>& pairings) const {
        MultiVec out(ngen);
        for (const auto& [m, c] : terms) {
            Mask rest = m;
            while (rest) {
                int g = std::countr_zero(rest);
                rest &= rest - 1;
                const Scalar& p = pairings[static_cast<size_t>(g)];
                if (p.isZero()) continue;
                Mask bit = Mask(1) << g;
                int below = std::popcount(m & (bit - 1));
                Scalar v = c * p;
                out.add(m & ~bit, (below & 1) ? -v : v);
            }
        }
        return out;
    }

    /// Total degree if homogeneous, nullopt for 0 or mixed-degree elements.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms) {
            int k = std::popcount(m);
            if (d && *d != k) return std::nullopt;
            d = k;
        }
        return d;
    }

    const Scalar& coeff(Mask m) const {
        static const Scalar zero;
        auto it = terms.find(m);
        return it == terms.end() ? zero : it->second;
    }

    friend bool operator==(const MultiVec& a, const MultiVec& b) { return a.terms == b.terms; }
    friend bool operator!=(const MultiVec& a, const MultiVec& b) { return !(a == b); }
};

/// Census of one monomial: bidegree, K-type, P-type and the I*-leg flag.
/// P-type counts G legs only, with I tracked separately, matching the
/// convention that a form I* ^ w has the P-type of w.
struct Stratum {
    int kDeg = 0, pDeg = 0;
    int kHol = 0, kAnti = 0;
    int gHol = 0, gAnti = 0;
    bool hasI = false;

    friend bool operator==(const Stratum&, const Stratum&) = default;
    friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

/// Filter over strata; unset fields match anything.
struct StratumFilter {
    std::optional<std::pair<int, int>> bidegree;
    std::optional<std::pair<int, int>> kType;
    std::optional<std::pair<int, int>> pType;
    std::optional<bool> hasI;

    bool matches(const Stratum& s) const {
        if (bidegree && (bidegree->first != s.kDeg || bidegree->second != s.pDeg)) return false;
        if (kType && (kType->first != s.kHol || kType->second != s.kAnti)) return false;
        if (pType && (pType->first != s.gHol || pType->second != s.gAnti)) return false;
        if (hasI && *hasI != s.hasI) return false;
        return true;
    }
};

/// Sparse alternating multilinear form on (g/m)_C at rank n.
struct Multiform {
    int n = 0;
    MultiVec v;

    Multiform() = default;
    explicit Multiform(int rank) : n(rank), v(4 * rank + 3) {}
    Multiform(int rank, MultiVec vec) : n(rank), v(std::move(vec)) {}

    GeneratorTable gens() const { return GeneratorTable(n); }

    static Multiform zero(int rank) { return Multiform(rank); }
    static Multiform one(int rank) { return Multiform(rank, MultiVec::one(4 * rank + 3)); }
    static Multiform monomial(int rank, Mask m, Scalar c = Scalar(1)) {
        return Multiform(rank, MultiVec::monomial(4 * rank + 3, m, std::move(c)));
    }
    static Multiform generatorDual(int rank, int g) {
        return monomial(rank, Mask(1) << g);
    }

    bool isZero() const { return v.isZero(); }
    std::optional<int> degree() const { return v.degree(); }

    Stratum stratumOf(Mask m) const;

    friend bool operator==(const Multiform& a, const Multiform& b) {
        return a.n == b.n && a.v == b.v;
    }
    friend bool operator!=(const Multiform& a, const Multiform& b) { return !(a == b); }

    Multiform operator+(const Multiform& o) const { return Multiform(n, v + o.v); }
    Multiform operator-(const Multiform& o) const { return Multiform(n, v - o.v); }
    Multiform operator*(const Scalar& c) const { return Multiform(n, v * c); }
    Multiform operator-() const { return Multiform(n, -v); }
};

void requireSameRank(const Multiform& a, const Multiform& b);

Multiform wedge(const Multiform& a, const Multiform& b);
Multiform wedgePow(const Multiform& a, int k);

/// Insertion of the tangent vector sum_g coeffs[g] * generator(g).
Multiform insert(const std::vector<Scalar>& coeffs, const Multiform& a);
Multiform insertGen(int g, const Multiform& a);

Multiform project(const Multiform& a, const StratumFilter& f);

/// Conjugate-linear involution: swaps holomorphic/antiholomorphic generators,
/// fixes I, conjugates coefficients.
Multiform conjugate(const Multiform& a);

/// Canonical serialization: one "(name ^ ... ^ name, re, im)" triple per
/// monomial in graded-lex monomial order.
std::string serializeMultiform(const Multiform& a);

}  // namespace crp
