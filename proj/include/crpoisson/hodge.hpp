#pragma once

#include "crpoisson/calculus.hpp"

namespace crp {

/// K-Hodge star, K-(co)differentials and the K-Lefschetz pair. The star acts
/// on the K-horizontal legs only; P legs pass through on the right of the
/// canonical leg order, so no extra sign bookkeeping appears.
class Hodge {
  public:
    explicit Hodge(const Calculus& cal);

    const Calculus& calculus() const { return *cal_; }

    /// Complex bilinear dual pairing on the K-horizontal exterior algebra,
    /// Gram-determinant extension of the degree-1 values (2 on Z*/Zbar*, 4 on
    /// the F* pairs -- twice the inverse metric, the normalization under
    /// which vol_K and the printed star values are reproduced).
    Scalar pairingK(const Multiform& a, const Multiform& b) const;

    Multiform starK(const Multiform& a) const;

    Multiform deltaK(const Multiform& a) const;       // -*_K d_K *_K
    Multiform delStarK(const Multiform& a) const;     // -*_K dbar_K *_K
    Multiform delBarStarK(const Multiform& a) const;  // -*_K del_K *_K
    Multiform laplaceK(const Multiform& a) const;     // d_K delta_K + delta_K d_K

    Multiform lefschetzK(const Multiform& a) const;  // omega_K ^ .

    /// Metric adjoint of the K-Lefschetz map: (-1)^{K-degree} *_K L_K *_K.
    /// On odd K-degrees this is the sandwich -*_K L_K *_K; on even ones the
    /// sandwich picks up the *_K*_K sign (see starSquareSign), and only the
    /// adjoint satisfies the printed commutation formulas.
    Multiform lefschetzKAdj(const Multiform& a) const;
    Multiform lefschetzKAdjSandwich(const Multiform& a) const;  // -*_K L_K *_K literally

    /// Scalar s(p,q) with *_K *_K = s on the K-type (p,q) stratum; throws if
    /// the stratum is not an eigenspace.
    Scalar starSquareSign(int p, int q) const;

    Scalar degreeOnePairing(int g) const;

  private:
    const Calculus* cal_;
    Mask kMask_, pMaskBits_;
    Mask topK_;
    Scalar volCoeff_;

    std::pair<Mask, Scalar> starMonomial(Mask m) const;
    Scalar gramMonomial(Mask a, Mask b) const;
};

}  // namespace crp
