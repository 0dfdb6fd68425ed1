#pragma once

#include <vector>

#include "crpoisson/lie_model.hpp"
#include "crpoisson/multiform.hpp"

namespace crp {

/// The basic M-invariant forms of low degree and the derived volume data.
struct BasicForms {
    Multiform Istar, Zstar, Zbarstar;
    Multiform w20, w11, w11bar, w02;
    Multiform omegaK;  // pullback of the Kaehler form, (1/2)(i Z*^Zbar* + w20)
    Multiform volK;    // (1/(2^{n+1} n!)) i Z*^Zbar*^w20^n
};

/// Exterior derivative (bracket recipe), its bidegree/K-type splittings, the
/// operator dP*, the m-action on forms and invariant-subspace enumeration.
class Calculus {
  public:
    explicit Calculus(LieModel mdl);

    const LieModel& model() const { return model_; }
    const BasicForms& basic() const { return basic_; }
    int n() const { return model_.n; }

    /// Exterior derivative of an invariant form via the alternating bracket
    /// sum. The recipe equals d only on m-invariant forms; enable
    /// checkInvariantInputs to reject other inputs.
    Multiform d(const Multiform& a) const;

    Multiform dK(const Multiform& a) const;
    Multiform dP(const Multiform& a) const;
    Multiform delK(const Multiform& a) const;     // K-type (p+1, q) part of d
    Multiform delKbar(const Multiform& a) const;  // K-type (p, q+1) part of d

    /// dP* a = sum_s I* ^ i_{G_s^{0,1}} i_{G_s^{1,0}} a  (normalization 1).
    Multiform pCodiff(const Multiform& a) const;

    /// Coadjoint action of mBasis[j], extended as a derivation over wedge.
    Multiform mActionOnForm(size_t j, const Multiform& a) const;

    /// Infinitesimal m_C-invariance; equals M-invariance since M is connected.
    bool isInvariant(const Multiform& a) const;

    /// All monomial masks whose stratum matches the filter.
    std::vector<Mask> strataMonomials(const StratumFilter& f) const;

    /// Exact nullspace basis of the stacked m-actions on a stratum.
    std::vector<Multiform> invariantSubspace(const StratumFilter& f) const;

    bool checkInvariantInputs = false;

  private:
    LieModel model_;
    std::vector<MultiVec> d1_;      // d of each generator dual (2-forms)
    std::vector<std::vector<MultiVec>> mDual_;  // m-action on generator duals
    BasicForms basic_;

    MultiVec applyLegwise(const MultiVec& a, const std::vector<MultiVec>& table) const;
};

}  // namespace crp
