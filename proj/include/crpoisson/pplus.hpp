#pragma once

#include <vector>

#include "crpoisson/lie_model.hpp"
#include "crpoisson/multiform.hpp"

namespace crp {

/// The chain spaces Lambda^k p_+ (p_+ = g_1 + g_2, complexified) with the
/// Lie-algebra homology differential. Basis order: holomorphic g_1 (0..n-1),
/// antiholomorphic g_1 (n..2n-1), the g_2 generator (index 2n).
class PPlusAlgebra {
  public:
    explicit PPlusAlgebra(int rank);

    int n() const { return n_; }
    int count() const { return 2 * n_ + 1; }
    int holo(int s) const { return s - 1; }        // s in 1..n
    int anti(int s) const { return n_ + s - 1; }
    int nuPlus() const { return 2 * n_; }

    const Matrix& rep(int j) const { return rep_[static_cast<size_t>(j)]; }

    MultiVec monomial(Mask m, Scalar c = Scalar(1)) const {
        return MultiVec::monomial(count(), m, std::move(c));
    }

    /// Homology differential: sum_{i<j} (-1)^{i+j} [Z_i,Z_j] ^ (rest).
    MultiVec kostantCodiff(const MultiVec& a) const;

    /// Dual-basis contraction form of the same operator.
    MultiVec kostantCodiffTech(const MultiVec& a) const;

    /// (d* a) ^ b == (-1)^k a ^ (d* b) over full monomial bases in degrees
    /// (k, 2n+2-k).
    bool adjointPairingCheck(int k) const;

    struct RankRow {
        int k = 0;
        int rankValue = 0;
        int dimSource = 0;
        int dimTarget = 0;
        bool injective = false;
        bool surjective = false;
    };
    /// Ranks of the induced map Lambda^k H* -> Lambda^{k-2} H* (x) Q*.
    std::vector<RankRow> homologyRanks() const;

  private:
    int n_;
    int N_;
    std::vector<Matrix> rep_;
    // bracket[u][v] = coefficient c with [rep u, rep v] = c * rep(nuPlus)
    std::vector<std::vector<Scalar>> bracket_;
};

}  // namespace crp
