#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crp {

using Mask = std::uint32_t;

/// Which factor of T(G/M) a generator spans.
enum class Factor { KHorizontal, PVertical };

enum class HoloType { Holomorphic, Antiholomorphic, RealLine };

/// Canonical generator order for rank n (4n+3 generators):
///   0: Z,  1: Zbar,
///   2..n+1:        F_s^{1,0}   (s = 1..n)
///   n+2..2n+1:     F_s^{0,1}
///   2n+2:          I
///   2n+3..3n+2:    G_s^{1,0}
///   3n+3..4n+2:    G_s^{0,1}
/// K legs occupy a prefix, P legs a suffix, so bidegree projection is a
/// popcount split on the monomial mask.
struct GeneratorTable {
    int n;

    explicit GeneratorTable(int rank) : n(rank) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
        if (4 * n + 3 > 31) throw std::invalid_argument("rank too large for mask storage");
    }

    int count() const { return 4 * n + 3; }

    int z() const { return 0; }
    int zbar() const { return 1; }
    int fHol(int s) const { return 1 + s; }        // s in 1..n
    int fAnti(int s) const { return n + 1 + s; }
    int iGen() const { return 2 * n + 2; }
    int gHol(int s) const { return 2 * n + 2 + s; }
    int gAnti(int s) const { return 3 * n + 2 + s; }

    Factor factor(int g) const { return g <= 2 * n + 1 ? Factor::KHorizontal : Factor::PVertical; }

    HoloType holoType(int g) const {
        if (g == iGen()) return HoloType::RealLine;
        if (g == z() || (g >= fHol(1) && g <= fHol(n)) || (g >= gHol(1) && g <= gHol(n)))
            return HoloType::Holomorphic;
        return HoloType::Antiholomorphic;
    }

    /// 1-based span index for F/G generators, 0 for Z, Zbar, I.
    int spanIndex(int g) const {
        if (g == z() || g == zbar() || g == iGen()) return 0;
        if (g <= n + 1) return g - 1;
        if (g <= 2 * n + 1) return g - n - 1;
        if (g <= 3 * n + 2) return g - 2 * n - 2;
        return g - 3 * n - 2;
    }

    /// Conjugation partner (swaps holomorphic/antiholomorphic, fixes I).
    int partner(int g) const {
        if (g == z()) return zbar();
        if (g == zbar()) return z();
        if (g == iGen()) return iGen();
        int s = spanIndex(g);
        switch (holoType(g)) {
            case HoloType::Holomorphic:
                return factor(g) == Factor::KHorizontal ? fAnti(s) : gAnti(s);
            default:
                return factor(g) == Factor::KHorizontal ? fHol(s) : gHol(s);
        }
    }

    Mask kMask() const { return (Mask(1) << (2 * n + 2)) - 1; }
    Mask pMask() const { return ((Mask(1) << count()) - 1) & ~kMask(); }
    Mask kHolMask() const { return Mask(1) | (((Mask(1) << n) - 1) << 2); }
    Mask kAntiMask() const { return Mask(2) | (((Mask(1) << n) - 1) << (n + 2)); }
    Mask gHolMask() const { return ((Mask(1) << n) - 1) << (2 * n + 3); }
    Mask gAntiMask() const { return ((Mask(1) << n) - 1) << (3 * n + 3); }
    Mask iMask() const { return Mask(1) << iGen(); }

    std::string name(int g) const {
        if (g == z()) return "Z*";
        if (g == zbar()) return "Zbar*";
        if (g == iGen()) return "I*";
        int s = spanIndex(g);
        std::string base = factor(g) == Factor::KHorizontal ? "F" : "G";
        std::string type = holoType(g) == HoloType::Holomorphic ? "^10" : "^01";
        return base + std::to_string(s) + type + "*";
    }
};

}  // namespace crp
