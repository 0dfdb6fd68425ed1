#pragma once

#include <utility>
#include <vector>

#include "crpoisson/linalg.hpp"
#include "crpoisson/multiform.hpp"

namespace crp {

/// Sparse generator combination: list of (generator id, coefficient).
using GenCombo = std::vector<std::pair<int, Scalar>>;

/// Normalization of the named generators inside the fixed matrix realization.
/// Z = zE*E + zY*E_{1,N}; Zbar = conj-partner; I = iC*(E_{N,1} + E_{1,N});
/// F/G carry the sign gSign on the eta/xi legs. dSign flips the invariant
/// exterior-derivative recipe. Defaults are the calibrated values under which
/// the basic-form tables of the source model hold; see test_conventions.
struct ModelConventions {
    Scalar zE = Scalar::ratio(1, 2);
    Scalar zY = Scalar(-1);
    Scalar iC{Rational(0), Rational(1)};
    Scalar fSign = Scalar(1);
    Scalar gSign = Scalar(1);
    int dSign = -1;
    // Orientation of the complex structure on the F / G slots: when set, the
    // holomorphic generator sits on the conjugate matrix side.
    bool swapF = false;
    bool swapG = false;
};

/// Matrix realization of su(n+1,1)_C with the |2|-grading, the named
/// generators of (g/m)_C, exact quotient structure constants and the
/// m-action on the generator basis.
struct LieModel {
    int n = 0;
    int N = 0;  // n + 2
    ModelConventions conv;

    std::vector<Matrix> rep;     // generator representatives, generator order
    Matrix repE;                 // grading element
    std::vector<Matrix> mBasis;  // n^2 basis matrices of m_C

    /// qb[u][v] with u < v: [rep(u), rep(v)] = sum_w c_w rep(w)  (mod m_C)
    std::vector<std::vector<GenCombo>> qb;

    /// mAct[j][u]: ad(mBasis[j]) rep(u) = sum_w c_w rep(w)  (exactly, no m-part)
    std::vector<std::vector<GenCombo>> mAct;

    GeneratorTable gens() const { return GeneratorTable(n); }

    /// Quotient-bracket of generator combinations (bilinear, antisymmetric).
    GenCombo quotientBracket(const GenCombo& a, const GenCombo& b) const;
    GenCombo quotientBracket(int u, int v) const;

    /// Decompose any sl(N) matrix as sum_w gen[w]*rep(w) + m-part.
    struct Decomposition {
        std::vector<Scalar> gen;
        Matrix mPart;
    };
    Decomposition decompose(const Matrix& x) const;

    Matrix elementMatrix(const GenCombo& c) const;

    /// Coefficient vector (length 4n+3) of F_X^{1,0} etc. for X over Q(i).
    std::vector<Scalar> vecFHol(const std::vector<Scalar>& x) const;
    std::vector<Scalar> vecFAnti(const std::vector<Scalar>& x) const;
    std::vector<Scalar> vecGHol(const std::vector<Scalar>& x) const;
    std::vector<Scalar> vecGAnti(const std::vector<Scalar>& x) const;
    std::vector<Scalar> vecGen(int g) const;

  private:
    Matrix decompSolver_;         // row-reduced [gen reps | m basis] columns
    std::vector<int> solverPivots_;
    friend LieModel buildModel(int n, int maxRank, const ModelConventions& conv);
};

/// Normalized invariant form: 1/(2(n+2)) times the Killing form equals the
/// trace form on the matrix realization.
Scalar pairingB(const Matrix& x, const Matrix& y);

LieModel buildModel(int n, int maxRank = 4, const ModelConventions& conv = {});

/// Elementary N x N matrix with a 1 in (r, c), 0-based.
Matrix unitMatrix(int N, int r, int c);

}  // namespace crp
