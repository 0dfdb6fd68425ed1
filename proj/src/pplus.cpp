#include "crpoisson/pplus.hpp"

#include <map>
#include <stdexcept>

namespace crp {

PPlusAlgebra::PPlusAlgebra(int rank) : n_(rank), N_(rank + 2) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    rep_.reserve(static_cast<size_t>(count()));
    for (int s = 1; s <= n_; ++s) rep_.push_back(unitMatrix(N_, s, N_ - 1));
    for (int s = 1; s <= n_; ++s) rep_.push_back(unitMatrix(N_, 0, s));
    rep_.push_back(unitMatrix(N_, 0, N_ - 1));

    bracket_.assign(static_cast<size_t>(count()),
                    std::vector<Scalar>(static_cast<size_t>(count())));
    for (int u = 0; u < count(); ++u)
        for (int v = 0; v < count(); ++v) {
            Matrix br = rep_[static_cast<size_t>(u)].commutator(rep_[static_cast<size_t>(v)]);
            // p_+ is two-step nilpotent: brackets land in the g_2 line.
            Scalar c = br.at(0, N_ - 1);
            Matrix residue = br - rep_[static_cast<size_t>(nuPlus())] * c;
            if (!residue.isZero()) throw std::logic_error("bracket left g_2");
            bracket_[static_cast<size_t>(u)][static_cast<size_t>(v)] = c;
        }
}

MultiVec PPlusAlgebra::kostantCodiff(const MultiVec& a) const {
    MultiVec out(count());
    for (const auto& [m, c] : a.terms) {
        std::vector<int> legs;
        Mask rest = m;
        while (rest) {
            legs.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        const int k = static_cast<int>(legs.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const Scalar& br =
                    bracket_[static_cast<size_t>(legs[static_cast<size_t>(i)])]
                            [static_cast<size_t>(legs[static_cast<size_t>(j)])];
                if (br.isZero()) continue;
                Mask remainder =
                    m & ~(Mask(1) << legs[static_cast<size_t>(i)]) & ~(Mask(1) << legs[static_cast<size_t>(j)]);
                // 1-based positions in the (-1)^{i+j} convention.
                int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
                Mask nu = Mask(1) << nuPlus();
                if (remainder & nu) continue;  // nu ^ ... ^ nu = 0
                Scalar coeff = c * br;
                if (sign < 0) coeff = -coeff;
                if (MultiVec::wedgeSign(nu, remainder) < 0) coeff = -coeff;
                out.add(nu | remainder, coeff);
            }
    }
    return out;
}

MultiVec PPlusAlgebra::kostantCodiffTech(const MultiVec& a) const {
    // Dual pairs: xi-basis of (g_-1)_C is {E_{s,0}, E_{N-1,s}}, with B-duals
    // {E_{0,s}, E_{s,N-1}} in (g_1)_C; nu_± = E_{0,N-1}, E_{N-1,0}.
    MultiVec out(count());
    Matrix nuMinus = unitMatrix(N_, N_ - 1, 0);
    MultiVec nuForm = monomial(Mask(1) << nuPlus());
    auto contraction = [&](const Matrix& x) {
        std::vector<Scalar> p(static_cast<size_t>(count()));
        for (int j = 0; j < count(); ++j) p[static_cast<size_t>(j)] = pairingB(rep(j), x);
        return p;
    };
    for (int s = 1; s <= n_; ++s) {
        {
            Matrix xi = unitMatrix(N_, s, 0);
            Matrix eta = unitMatrix(N_, 0, s);
            MultiVec term = a.insert(contraction(xi)).insert(contraction(eta.commutator(nuMinus)));
            out += nuForm.wedge(term);
        }
        {
            Matrix xi = unitMatrix(N_, N_ - 1, s);
            Matrix eta = unitMatrix(N_, s, N_ - 1);
            MultiVec term = a.insert(contraction(xi)).insert(contraction(eta.commutator(nuMinus)));
            out += nuForm.wedge(term);
        }
    }
    return out * Scalar::ratio(1, 2);
}

bool PPlusAlgebra::adjointPairingCheck(int k) const {
    const int total = count();
    if (k < 1 || k > 2 * n_) return false;
    const Mask top = Mask(1) << total;
    for (Mask ma = 0; ma < top; ++ma) {
        if (std::popcount(ma) != k) continue;
        MultiVec alpha = monomial(ma);
        MultiVec da = kostantCodiff(alpha);
        for (Mask mb = 0; mb < top; ++mb) {
            if (std::popcount(mb) != 2 * n_ + 2 - k) continue;
            MultiVec beta = monomial(mb);
            MultiVec lhs = da.wedge(beta);
            MultiVec rhs = alpha.wedge(kostantCodiff(beta));
            if (k % 2 != 0) rhs = -rhs;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<PPlusAlgebra::RankRow> PPlusAlgebra::homologyRanks() const {
    std::vector<RankRow> rows;
    const Mask hAll = (Mask(1) << (2 * n_)) - 1;
    for (int k = 0; k <= 2 * n_ + 1; ++k) {
        // Source: Lambda^k H*, target: Lambda^{k-2} H* ^ nu_+.
        std::vector<Mask> src, dst;
        for (Mask m = 0; m <= hAll; ++m) {
            int c = std::popcount(m);
            if (c == k) src.push_back(m);
            if (c == k - 2) dst.push_back(m);
        }
        std::map<Mask, int> dstIndex;
        for (size_t i = 0; i < dst.size(); ++i)
            dstIndex[dst[i] | (Mask(1) << nuPlus())] = static_cast<int>(i);
        Matrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            MultiVec img = kostantCodiff(monomial(src[c]));
            for (const auto& [m, coeff] : img.terms) {
                auto it = dstIndex.find(m);
                if (it == dstIndex.end()) throw std::logic_error("codifferential left target");
                mat.at(it->second, static_cast<int>(c)) = coeff;
            }
        }
        RankRow row;
        row.k = k;
        row.dimSource = static_cast<int>(src.size());
        row.dimTarget = static_cast<int>(dst.size());
        row.rankValue = rank(mat);
        row.injective = row.rankValue == row.dimSource;
        row.surjective = row.rankValue == row.dimTarget;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace crp
