#include "crpoisson/checks.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace crp {

Scalar randomScalar(SplitMix& rng) {
    Rational re(rng.range(-7, 7), rng.range(1, 7));
    Rational im(rng.range(-7, 7), rng.range(1, 7));
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
}

std::vector<Scalar> randomVector(SplitMix& rng, int n) {
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(randomScalar(rng));
    return v;
}

Multiform randomForm(SplitMix& rng, int n, int terms) {
    GeneratorTable g(n);
    Multiform out(n);
    for (int t = 0; t < terms; ++t) {
        Mask m = static_cast<Mask>(rng.next()) & ((Mask(1) << g.count()) - 1);
        out.v.add(m, randomScalar(rng));
    }
    return out;
}

namespace {

std::string diffWitness(const Multiform& lhs, const Multiform& rhs) {
    return "lhs-rhs = " + serializeMultiform(lhs - rhs);
}

std::string valueWitness(const Scalar& got, const Scalar& expected) {
    return "machine = " + got.str() + ", printed = " + expected.str();
}

CheckResult formsEqual(const Multiform& lhs, const Multiform& rhs, bool engineInternal = false) {
    if (lhs == rhs) return CheckResult::pass();
    std::string w = diffWitness(lhs, rhs);
    return engineInternal ? CheckResult::fail(std::move(w))
                          : CheckResult::discrepancy(std::move(w));
}

CheckResult formZero(const Multiform& a, const std::string& label) {
    if (a.isZero()) return CheckResult::pass();
    return CheckResult::discrepancy(label + " = " + serializeMultiform(a));
}

Scalar evalTwo(const Multiform& w, const std::vector<Scalar>& v1, const std::vector<Scalar>& v2) {
    return insert(v2, insert(v1, w)).v.coeff(0);
}

Scalar herm(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar acc;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i].conj();
    return acc;
}

/// Apply a chain of generator insertions, rightmost first.
Multiform insertChain(const std::vector<int>& gens, const Multiform& a) {
    Multiform out = a;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) out = insertGen(*it, out);
    return out;
}

/// Strictly increasing index tuples of the given length from 1..n.
std::vector<std::vector<int>> tuples(int n, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int s = start; s <= n; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

struct Registry {
    std::vector<CheckDef> defs;
    void add(std::string id, std::string anchor,
             std::function<CheckResult(const CheckContext&)> fn) {
        defs.push_back({std::move(id), std::move(anchor), std::move(fn)});
    }
};

// ---------------------------------------------------------------- structure

void addStructureChecks(Registry& r) {
    r.add("structure.jacobi", "§3.3 matrix realization", [](const CheckContext& c) {
        const LieModel& m = c.cal.model();
        std::vector<const Matrix*> span;
        for (const auto& g : m.rep) span.push_back(&g);
        if (m.n == 1)
            for (const auto& g : m.mBasis) span.push_back(&g);
        for (size_t a = 0; a < span.size(); ++a)
            for (size_t b = a + 1; b < span.size(); ++b)
                for (size_t d = b + 1; d < span.size(); ++d) {
                    const Matrix &X = *span[a], &Y = *span[b], &Z = *span[d];
                    Matrix j = X.commutator(Y).commutator(Z) + Y.commutator(Z).commutator(X) +
                               Z.commutator(X).commutator(Y);
                    if (!j.isZero()) return CheckResult::fail("Jacobi fails on a basis triple");
                }
        return CheckResult::pass();
    });

    r.add("structure.grading", "§2.2, eigenspaces for ad(E)", [](const CheckContext& c) {
        const LieModel& m = c.cal.model();
        const int N = m.N;
        auto gradeOf = [N](int row, int col) {
            auto slot = [N](int i) { return i == 0 ? 1 : (i == N - 1 ? -1 : 0); };
            return slot(row) - slot(col);
        };
        for (const Matrix& g : m.rep) {
            Matrix ad = m.repE.commutator(g);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    Scalar expect = g.at(i, j) * Scalar(gradeOf(i, j));
                    if (ad.at(i, j) != expect)
                        return CheckResult::fail("ad(E) grade mismatch at a matrix entry");
                }
        }
        // Grade compatibility of the bracket: commutators of graded matrix
        // units stay in the grade-(i+j) positions.
        std::vector<std::pair<int, Matrix>> graded;
        graded.push_back({-2, unitMatrix(N, N - 1, 0)});
        graded.push_back({2, unitMatrix(N, 0, N - 1)});
        graded.push_back({0, m.repE});
        for (int s = 1; s <= m.n; ++s) {
            graded.push_back({-1, unitMatrix(N, s, 0)});
            graded.push_back({-1, unitMatrix(N, N - 1, s)});
            graded.push_back({1, unitMatrix(N, s, N - 1)});
            graded.push_back({1, unitMatrix(N, 0, s)});
            graded.push_back({0, unitMatrix(N, s, s % m.n + 1)});
        }
        for (const auto& [gi, x] : graded)
            for (const auto& [gj, y] : graded) {
                Matrix br = x.commutator(y);
                for (int r = 0; r < N; ++r)
                    for (int col = 0; col < N; ++col)
                        if (!br.at(r, col).isZero() && gradeOf(r, col) != gi + gj)
                            return CheckResult::fail("bracket leaves its grade");
            }
        return CheckResult::pass();
    });

    r.add("structure.pairing.EE", "§3.3, B(E, E) = 2", [](const CheckContext& c) {
        Scalar v = pairingB(c.cal.model().repE, c.cal.model().repE);
        if (v == Scalar(2)) return CheckResult::pass();
        return CheckResult::discrepancy(valueWitness(v, Scalar(2)));
    });

    r.add("structure.pairing.XY", "§3.3, B(X, Y) = -2 <X, Y>", [](const CheckContext& c) {
        const int n = c.n(), N = c.cal.model().N;
        SplitMix rng = c.rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Scalar> x = randomVector(rng, n), y = randomVector(rng, n);
            // xi_X in g_{-1} and eta_Y in g_1 for rational complex vectors.
            Matrix xi(N, N), eta(N, N);
            for (int s = 1; s <= n; ++s) {
                xi.at(s, 0) = x[static_cast<size_t>(s - 1)];
                xi.at(N - 1, s) = -x[static_cast<size_t>(s - 1)].conj();
                eta.at(0, s) = -y[static_cast<size_t>(s - 1)].conj();
                eta.at(s, N - 1) = y[static_cast<size_t>(s - 1)];
            }
            Scalar hxy = herm(x, y);
            Scalar expect = -(hxy + hxy.conj());  // -2 Re<X,Y>; real X,Y give -2<X,Y>
            Scalar got = pairingB(xi, eta);
            if (got != expect)
                return CheckResult::discrepancy(valueWitness(got, expect));
        }
        return CheckResult::pass();
    });

    r.add("structure.pairing.g2", "§3.3, B(x, y) = -xy", [](const CheckContext& c) {
        const int N = c.cal.model().N;
        // x = 2i, y = 3i say; printed row gives -xy = -(2i)(3i) = 6.
        Matrix xm = unitMatrix(N, N - 1, 0) * Scalar(Rational(0), Rational(2));
        Matrix ym = unitMatrix(N, 0, N - 1) * Scalar(Rational(0), Rational(3));
        Scalar got = pairingB(xm, ym);
        Scalar printed = Scalar(6);
        if (got == printed) return CheckResult::pass();
        return CheckResult::discrepancy(valueWitness(got, printed));
    });

    r.add("structure.pairing.m", "§3.3, B on m x m", [](const CheckContext& c) {
        const LieModel& m = c.cal.model();
        // First two diagonal m-basis elements (b = -1/2, B = E_ss).
        const Matrix& m1 = m.mBasis[0];
        Scalar got = pairingB(m1, m1);
        Scalar printed = Scalar::ratio(1, 4) + Scalar(1);  // b^2 + tr(B^2)
        if (got == printed) return CheckResult::pass();
        return CheckResult::discrepancy(valueWitness(got, printed));
    });

    r.add("structure.pairing.offdiag", "Lemma 2.3 proof, B vanishes unless i+j = 0",
          [](const CheckContext& c) {
              const LieModel& m = c.cal.model();
              const int N = m.N;
              // Graded pieces: g_{-2}, g_{-1}, g_0 (E and m), g_1, g_2 on unit matrices.
              std::vector<std::pair<int, Matrix>> graded;
              graded.push_back({-2, unitMatrix(N, N - 1, 0)});
              graded.push_back({2, unitMatrix(N, 0, N - 1)});
              graded.push_back({0, m.repE});
              for (int s = 1; s <= m.n; ++s) {
                  graded.push_back({-1, unitMatrix(N, s, 0)});
                  graded.push_back({-1, unitMatrix(N, N - 1, s)});
                  graded.push_back({1, unitMatrix(N, s, N - 1)});
                  graded.push_back({1, unitMatrix(N, 0, s)});
              }
              for (const auto& [gi, x] : graded)
                  for (const auto& [gj, y] : graded) {
                      if (gi + gj == 0) continue;
                      if (!pairingB(x, y).isZero())
                          return CheckResult::discrepancy("B nonzero on g_i x g_j, i+j != 0");
                  }
              return CheckResult::pass();
          });

    r.add("structure.gk", "§3.3, g_K values", [](const CheckContext& c) {
        // The defining values are m-invariant: g([m,u],v) + g(u,[m,v]) = 0 on
        // the K-horizontal space.
        const LieModel& m = c.cal.model();
        GeneratorTable g = m.gens();
        const int count = g.count();
        Matrix gk(count, count);
        gk.at(g.z(), g.zbar()) = Scalar(1);
        gk.at(g.zbar(), g.z()) = Scalar(1);
        for (int s = 1; s <= m.n; ++s) {
            gk.at(g.fHol(s), g.fAnti(s)) = Scalar::ratio(1, 2);
            gk.at(g.fAnti(s), g.fHol(s)) = Scalar::ratio(1, 2);
        }
        for (size_t j = 0; j < m.mBasis.size(); ++j)
            for (int u = 0; u < count; ++u)
                for (int v = 0; v < count; ++v) {
                    if (g.factor(u) != Factor::KHorizontal ||
                        g.factor(v) != Factor::KHorizontal)
                        continue;
                    Scalar acc;
                    for (const auto& [w, cw] : m.mAct[j][static_cast<size_t>(u)])
                        acc += cw * gk.at(w, v);
                    for (const auto& [w, cw] : m.mAct[j][static_cast<size_t>(v)])
                        acc += cw * gk.at(u, w);
                    if (!acc.isZero())
                        return CheckResult::fail("g_K values are not m-invariant");
                }
        return CheckResult::pass();
    });
}

// ------------------------------------------------------------------ table 1

void addTableOneChecks(Registry& r) {
    struct Row {
        const char* id;
        int which;  // 0 w20, 1 w11, 2 w11bar, 3 w02
        Scalar coeff;
    };
    const Scalar half = Scalar::ratio(1, 2);
    const Scalar mihalf = Scalar(Rational(0), Rational(-1, 2));
    std::vector<Row> rows = {{"table1.omega20.value", 0, mihalf},
                             {"table1.omega11.value", 1, half},
                             {"table1.omega11bar.value", 2, half},
                             {"table1.omega02.value", 3, mihalf}};
    for (const Row& row : rows) {
        int which = row.which;
        Scalar coeff = row.coeff;
        r.add(row.id, "Table 1", [which, coeff](const CheckContext& c) {
            const BasicForms& b = c.cal.basic();
            const LieModel& m = c.cal.model();
            const Multiform& w = which == 0   ? b.w20
                                 : which == 1 ? b.w11
                                 : which == 2 ? b.w11bar
                                              : b.w02;
            SplitMix rng = c.rng(100 + static_cast<std::uint64_t>(which));
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Scalar> x = randomVector(rng, c.n());
                std::vector<Scalar> y = randomVector(rng, c.n());
                std::vector<Scalar> v1, v2;
                switch (which) {
                    case 0: v1 = m.vecFHol(x); v2 = m.vecFAnti(y); break;
                    case 1: v1 = m.vecFHol(x); v2 = m.vecGAnti(y); break;
                    case 2: v1 = m.vecFAnti(x); v2 = m.vecGHol(y); break;
                    default: v1 = m.vecGHol(x); v2 = m.vecGAnti(y); break;
                }
                Scalar got = evalTwo(w, v1, v2);
                // The pairing is linear in the slot that enters holomorphically:
                // rows 0, 1, 3 are linear in X, the conjugate row is linear in Y.
                Scalar expected = coeff * (which == 2 ? herm(y, x) : herm(x, y));
                if (got != expected) return CheckResult::discrepancy(valueWitness(got, expected));
            }
            return CheckResult::pass();
        });
    }

    r.add("table1.census", "Table 1", [](const CheckContext& c) {
        const BasicForms& b = c.cal.basic();
        auto is = [&](const Multiform& w, int kd, int pd, int kp, int kq, int pr, int ps) {
            StratumFilter f;
            f.bidegree = {kd, pd};
            f.kType = {kp, kq};
            f.pType = {pr, ps};
            f.hasI = false;
            return !w.isZero() && project(w, f) == w;
        };
        bool ok = is(b.w20, 2, 0, 1, 1, 0, 0) && is(b.w11, 1, 1, 1, 0, 0, 1) &&
                  is(b.w11bar, 1, 1, 0, 1, 1, 0) && is(b.w02, 0, 2, 0, 0, 1, 1);
        if (!ok) return CheckResult::discrepancy("a basic 2-form sits in the wrong stratum");
        return CheckResult::pass();
    });

    r.add("table1.trivial_insert", "§3.4, I, Z, Zbar insert trivially",
          [](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              GeneratorTable g = c.cal.model().gens();
              for (const Multiform* w : {&b.w20, &b.w11, &b.w11bar, &b.w02})
                  for (int a : {g.z(), g.zbar(), g.iGen()})
                      if (!insertGen(a, *w).isZero())
                          return CheckResult::discrepancy(
                              "nontrivial insertion of an invariant vector");
              return CheckResult::pass();
          });
}

// ------------------------------------------------------------- section 3.4

void addDerivativeChecks(Registry& r) {
    using Fn = std::function<CheckResult(const CheckContext&)>;
    auto mk = [](Fn fn) { return fn; };
    const Scalar i = Scalar::i();
    const Scalar two(2);

    r.add("section3.4.delK_Z", "§3.4 derivative tables", mk([](const CheckContext& c) {
              return formZero(c.cal.delK(c.cal.basic().Zstar), "delK Z*");
          }));
    r.add("section3.4.dP_Z", "§3.4 derivative tables", mk([two, i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.Zstar),
                                b.w11 * two + wedge(b.Zstar, b.Istar) * (i * two));
          }));
    r.add("section3.4.delK_Zbar", "§3.4 derivative tables", mk([i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.delK(b.Zbarstar),
                                wedge(b.Zbarstar, b.Zstar) + b.w20 * i);
          }));
    r.add("section3.4.dP_Zbar", "§3.4 derivative tables", mk([two, i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.Zbarstar),
                                b.w11bar * two - wedge(b.Zbarstar, b.Istar) * (i * two));
          }));
    r.add("section3.4.delK_I", "§3.4 derivative tables", mk([](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.delK(b.Istar), wedge(b.Zstar, b.Istar));
          }));
    r.add("section3.4.dP_I", "§3.4 derivative tables", mk([two](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.Istar), b.w02 * two);
          }));
    r.add("section3.4.dKdP_Z", "§3.4 derivative tables", mk([](const CheckContext& c) {
              return formZero(c.cal.dK(c.cal.dP(c.cal.basic().Zstar)), "dK dP Z*");
          }));
    r.add("section3.4.dKdP_Zbar", "§3.4 derivative tables", mk([](const CheckContext& c) {
              return formZero(c.cal.dK(c.cal.dP(c.cal.basic().Zbarstar)), "dK dP Zbar*");
          }));
    r.add("section3.4.delK_w20", "§3.4 derivative tables", mk([](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.delK(b.w20), -wedge(b.Zstar, b.w20));
          }));
    r.add("section3.4.dP_w20", "§3.4 derivative tables", mk([two, i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.w20), wedge(b.Zstar, b.w11bar) * (i * two) -
                                                     wedge(b.Zbarstar, b.w11) * (i * two));
          }));
    r.add("section3.4.delK_w11", "§3.4 derivative tables", mk([](const CheckContext& c) {
              return formZero(c.cal.delK(c.cal.basic().w11), "delK w11");
          }));
    r.add("section3.4.dP_w11", "§3.4 derivative tables", mk([two, i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.w11), wedge(b.Istar, b.w11) * (i * two * Scalar(-1)) +
                                                     wedge(b.Zstar, b.w02) * (i * two));
          }));
    r.add("section3.4.delK_w11bar", "§3.4 derivative tables", mk([](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.delK(b.w11bar), -wedge(b.Istar, b.w20));
          }));
    r.add("section3.4.dP_w11bar", "§3.4 derivative tables", mk([two, i](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.dP(b.w11bar),
                                wedge(b.Istar, b.w11bar) * (i * two) -
                                    wedge(b.Zbarstar, b.w02) * (i * two));
          }));
    r.add("section3.4.delK_w02", "§3.4 derivative tables", mk([](const CheckContext& c) {
              const BasicForms& b = c.cal.basic();
              return formsEqual(c.cal.delK(b.w02),
                                wedge(b.Zstar, b.w02) - wedge(b.Istar, b.w11));
          }));
    r.add("section3.4.dP_w02", "§3.4 derivative tables", mk([](const CheckContext& c) {
              return formZero(c.cal.dP(c.cal.basic().w02), "dP w02");
          }));
}

// ------------------------------------------------------ Kostant codifferential

void addCodiffChecks(Registry& r) {
    r.add("codiff.degree_one", "eq. (def-codiff)", [](const CheckContext& c) {
        const PPlusAlgebra& pp = c.pplus;
        for (int g = 0; g < pp.count(); ++g)
            if (!pp.kostantCodiff(pp.monomial(Mask(1) << g)).isZero())
                return CheckResult::discrepancy("codifferential nonzero on a 1-chain");
        return CheckResult::pass();
    });

    r.add("codiff.pair_bracket", "eq. (def-codiff)", [](const CheckContext& c) {
        const PPlusAlgebra& pp = c.pplus;
        // d*(Z1 ^ Z2) = -[Z1, Z2]; nontrivial only for hol/antihol pairs.
        for (int u = 0; u < pp.count(); ++u)
            for (int v = u + 1; v < pp.count(); ++v) {
                MultiVec lhs = pp.kostantCodiff(pp.monomial((Mask(1) << u) | (Mask(1) << v)));
                Matrix br = pp.rep(u).commutator(pp.rep(v));
                Scalar coeff = br.at(0, pp.n() + 1);
                MultiVec rhs = pp.monomial(Mask(1) << pp.nuPlus(), -coeff);
                if (lhs != rhs) return CheckResult::discrepancy("pair bracket value differs");
            }
        return CheckResult::pass();
    });

    r.add("codiff.squares_zero", "eq. (def-codiff)", [](const CheckContext& c) {
        const PPlusAlgebra& pp = c.pplus;
        for (Mask m = 0; m < (Mask(1) << pp.count()); ++m)
            if (!pp.kostantCodiff(pp.kostantCodiff(pp.monomial(m))).isZero())
                return CheckResult::fail("codifferential does not square to zero");
        return CheckResult::pass();
    });

    r.add("codiff.def_vs_tech", "eq. (tech-codiff)", [](const CheckContext& c) {
        const PPlusAlgebra& pp = c.pplus;
        if (c.n() <= 2) {
            for (Mask m = 0; m < (Mask(1) << pp.count()); ++m) {
                MultiVec a = pp.monomial(m);
                if (pp.kostantCodiff(a) != pp.kostantCodiffTech(a))
                    return CheckResult::discrepancy(
                        "def-codiff and tech-codiff differ on a monomial");
            }
            return CheckResult::pass();
        }
        SplitMix rng = c.rng(23);
        for (int t = 0; t < 200; ++t) {
            MultiVec a(pp.count());
            for (int j = 0; j < 4; ++j)
                a.add(static_cast<Mask>(rng.next()) & ((Mask(1) << pp.count()) - 1),
                      randomScalar(rng));
            if (pp.kostantCodiff(a) != pp.kostantCodiffTech(a))
                return CheckResult::discrepancy("def-codiff and tech-codiff differ");
        }
        return CheckResult::pass();
    });

    r.add("codiff.lemma2_3", "Lemma 2.3", [](const CheckContext& c) {
        if (c.n() > 2) return CheckResult::skipped("exhaustive adjointness runs for n <= 2");
        for (int k = 1; k <= 2 * c.n(); ++k)
            if (!c.pplus.adjointPairingCheck(k))
                return CheckResult::discrepancy("adjoint pairing identity fails in degree " +
                                                std::to_string(k));
        return CheckResult::pass();
    });

    r.add("prop4.1.vs_kostant", "Prop. 4.1", [](const CheckContext& c) {
        // Identification Lambda p_+ -> Lambda (k/m)* via B against the
        // P-vertical generators; dP* corresponds to the Kostant
        // codifferential up to one global constant (recorded below).
        const PPlusAlgebra& pp = c.pplus;
        const LieModel& m = c.cal.model();
        GeneratorTable g = m.gens();
        std::vector<Multiform> ident1;
        for (int u = 0; u < pp.count(); ++u) {
            Multiform f(c.n());
            for (int w = 0; w < g.count(); ++w) {
                if (g.factor(w) != Factor::PVertical) continue;
                Scalar v = pairingB(pp.rep(u), m.rep[static_cast<size_t>(w)]);
                if (!v.isZero()) f.v.add(Mask(1) << w, v);
            }
            ident1.push_back(f);
        }
        auto ident = [&](const MultiVec& a) {
            Multiform out(c.n());
            for (const auto& [mask, coeff] : a.terms) {
                Multiform acc = Multiform::one(c.n()) * coeff;
                Mask rest = mask;
                while (rest) {
                    int leg = std::countr_zero(rest);
                    rest &= rest - 1;
                    acc = wedge(acc, ident1[static_cast<size_t>(leg)]);
                }
                out = out + acc;
            }
            return out;
        };
        Scalar bridge;
        bool have = false;
        const Mask top = Mask(1) << std::min(pp.count(), c.n() <= 2 ? pp.count() : 7);
        for (Mask mask = 0; mask < top; ++mask) {
            MultiVec a = pp.monomial(mask);
            Multiform lhs = c.cal.pCodiff(ident(a));
            Multiform rhs = ident(pp.kostantCodiff(a));
            if (rhs.isZero()) {
                if (!lhs.isZero())
                    return CheckResult::discrepancy("dP* nonzero where the codifferential dies");
                continue;
            }
            if (!have) {
                const auto& [m0, c0] = *rhs.v.terms.begin();
                bridge = lhs.v.coeff(m0) / c0;
                have = true;
                // Frozen regression constant for the identification.
                if (bridge != -Scalar::i())
                    return CheckResult::discrepancy("bridge constant is " + bridge.str() +
                                                    ", expected the frozen value -i");
            }
            if (lhs != rhs * bridge)
                return CheckResult::discrepancy("no single bridge constant works");
        }
        if (!have) return CheckResult::fail("no nonzero instance found");
        return CheckResult::pass();
    });
}

// -------------------------------------------------------------- homology

void addHomologyChecks(Registry& r) {
    r.add("homology.ranks", "Prop. (homology_bundles)", [](const CheckContext& c) {
        for (const auto& row : c.pplus.homologyRanks()) {
            if (row.k <= c.n() + 1 && !row.surjective)
                return CheckResult::discrepancy("not surjective at k = " + std::to_string(row.k));
            if (row.k >= c.n() + 1 && !row.injective)
                return CheckResult::discrepancy("not injective at k = " + std::to_string(row.k));
        }
        return CheckResult::pass();
    });
}

// ---------------------------------------------------------------- prop 4.1

void addPCodiffChecks(Registry& r) {
    r.add("prop4.1.ideal", "Prop. 4.1", [](const CheckContext& c) {
        SplitMix rng = c.rng(31);
        for (int t = 0; t < 25; ++t) {
            Multiform a = wedge(c.cal.basic().Istar, randomForm(rng, c.n(), 4));
            if (!c.cal.pCodiff(a).isZero())
                return CheckResult::discrepancy("dP* does not kill the I*-ideal");
        }
        return CheckResult::pass();
    });

    r.add("prop4.1.sign_rule", "§3.2, dP*(a ^ b) = (-1)^i a ^ dP* b",
          [](const CheckContext& c) {
              SplitMix rng = c.rng(37);
              GeneratorTable g = c.cal.model().gens();
              for (int t = 0; t < 25; ++t) {
                  int deg = static_cast<int>(rng.range(0, 2 * c.n() + 1));
                  // Random K-pure form of fixed degree.
                  Multiform a(c.n());
                  for (int j = 0; j < 3; ++j) {
                      Mask m = 0;
                      std::vector<int> legs;
                      while (static_cast<int>(legs.size()) < deg) {
                          int leg = static_cast<int>(rng.range(0, 2 * c.n() + 1));
                          if (!(m & (Mask(1) << leg))) {
                              m |= Mask(1) << leg;
                              legs.push_back(leg);
                          }
                      }
                      a.v.add(m, randomScalar(rng));
                  }
                  Multiform b = randomForm(rng, c.n(), 4);
                  StratumFilter pPure;  // strip K legs from b
                  Multiform bP(c.n());
                  for (const auto& [m, coeff] : b.v.terms)
                      if (!(m & g.kMask())) bP.v.add(m, coeff);
                  Multiform lhs = c.cal.pCodiff(wedge(a, bP));
                  Multiform rhs = wedge(a, c.cal.pCodiff(bP));
                  if (deg % 2 != 0) rhs = -rhs;
                  if (lhs != rhs) return CheckResult::discrepancy(diffWitness(lhs, rhs));
              }
              return CheckResult::pass();
          });

    r.add("prop4.1.zwedge", "Thm. (main2) proof, dP*(Z* ^ t) = -Z* ^ dP* t",
          [](const CheckContext& c) {
              SplitMix rng = c.rng(41);
              GeneratorTable g = c.cal.model().gens();
              for (int t = 0; t < 25; ++t) {
                  Multiform tau = randomForm(rng, c.n(), 5);
                  Multiform tauP(c.n());
                  for (const auto& [m, coeff] : tau.v.terms)
                      if (!(m & g.kMask())) tauP.v.add(m, coeff);
                  Multiform lhs = c.cal.pCodiff(wedge(c.cal.basic().Zstar, tauP));
                  Multiform rhs = -wedge(c.cal.basic().Zstar, c.cal.pCodiff(tauP));
                  if (lhs != rhs) return CheckResult::discrepancy(diffWitness(lhs, rhs));
              }
              return CheckResult::pass();
          });

    r.add("prop4.1.squares_zero", "Prop. 4.1", [](const CheckContext& c) {
        SplitMix rng = c.rng(43);
        for (int t = 0; t < 25; ++t) {
            Multiform a = randomForm(rng, c.n(), 5);
            if (!c.cal.pCodiff(c.cal.pCodiff(a)).isZero())
                return CheckResult::fail("dP* dP* != 0");
        }
        return CheckResult::pass();
    });
}

// ----------------------------------------------------------------- kappa

void addKappaChecks(Registry& r) {
    r.add("kappa.support", "Prop. (relation_omega)", [](const CheckContext&) {
        if (KernelFactory::kappa(1, 1, 2, 1) != 2)
            return CheckResult::discrepancy("kappa(1,1,2,1) != 2");
        for (long p = 0; p <= 4; ++p)
            for (long q = 0; q <= 4; ++q)
                for (long k = 0; k <= 8; ++k) {
                    if (KernelFactory::kappa(p, q, k, -1) != 0 ||
                        KernelFactory::kappa(p, q, k, std::min(p, q) + 1) != 0)
                        return CheckResult::discrepancy("kappa nonzero outside its support");
                }
        return CheckResult::pass();
    });

    r.add("kappa.recursion", "Lemma (recursion_kappa)", [](const CheckContext& c) {
        const long nn = c.n();
        for (long p = 0; p <= nn; ++p)
            for (long q = 0; q <= nn; ++q)
                for (long k = std::max(p, q); k <= std::min(p, q) + nn; ++k)
                    for (long j = -2; j <= std::min(p, q) + 2; ++j) {
                        long lhs = KernelFactory::kappa(p, q, k, j) * (p - j) * (q - j);
                        long rhs = KernelFactory::kappa(p, q, k, j + 1) * (j + 1) *
                                   (k - (p + q) + j + 1);
                        if (lhs != rhs)
                            return CheckResult::discrepancy(
                                "recursion fails at (p,q,k,j) = (" + std::to_string(p) + "," +
                                std::to_string(q) + "," + std::to_string(k) + "," +
                                std::to_string(j) + ")");
                    }
        return CheckResult::pass();
    });

    r.add("relomega.sum_zero", "Prop. (relation_omega)", [](const CheckContext& c) {
        const long nn = c.n();
        for (long k = nn + 1; k <= 2 * nn; ++k)
            for (long p = std::max(0L, k - nn); p <= nn; ++p)
                for (long q = std::max(0L, k - nn); q <= nn; ++q) {
                    Multiform acc(c.n());
                    for (long j = -1; j <= std::min(p, q) + 1; ++j) {
                        long kap = KernelFactory::kappa(p, q, k, j);
                        if (kap)
                            acc = acc + c.kernels.omegaJTotal(p, q, k, j) * Scalar(kap);
                    }
                    if (!acc.isZero())
                        return CheckResult::discrepancy(
                            "sum kappa_j omega_j != 0 at (p,q,k) = (" + std::to_string(p) + "," +
                            std::to_string(q) + "," + std::to_string(k) + ")");
                }
        return CheckResult::pass();
    });

    r.add("relomega.insertions", "Prop. (relation_omega) proof", [](const CheckContext& c) {
        const BasicForms& b = c.cal.basic();
        const LieModel& m = c.cal.model();
        const Scalar i = Scalar::i();
        SplitMix rng = c.rng(53);
        for (int t = 0; t < 10; ++t) {
            std::vector<Scalar> x = randomVector(rng, c.n());
            Multiform l1 = insert(m.vecGHol(x), b.w02);
            Multiform r1 = insert(m.vecFHol(x), b.w11) * i;
            if (l1 != r1) return CheckResult::discrepancy("i_G w02 != i i_F w11");
            Multiform l2 = insert(m.vecGAnti(x), b.w02);
            Multiform r2 = insert(m.vecFAnti(x), b.w11bar) * (-i);
            if (l2 != r2) return CheckResult::discrepancy("i_G w02 != -i i_F w11bar");
            Multiform l3 = insert(m.vecGAnti(x), b.w11);
            Multiform r3 = insert(m.vecFAnti(x), b.w20) * (-i);
            if (l3 != r3) return CheckResult::discrepancy("i_G w11 != -i i_F w20");
        }
        return CheckResult::pass();
    });
}

// --------------------------------------------------------------- lemma 4.1

void addLemma41Checks(Registry& r) {
    r.add("lemma4.1.proportionality", "Lemma (4.1)", [](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        // Constant fixed by the (p,q,k,j) = (0,0,1,0) oracle; frozen value.
        const Scalar cGlobal(Rational(0), Rational(-1, 2));
        {
            Multiform lhs = c.cal.pCodiff(b.w02);
            Multiform rhs = b.Istar * Scalar(-nn) * cGlobal;
            if (lhs != rhs)
                return CheckResult::discrepancy("oracle constant is not -i/2: " +
                                                diffWitness(lhs, rhs));
        }
        for (long p = 0; p <= nn; ++p)
            for (long q = 0; q <= nn; ++q)
                for (long k = std::max(p, q); k <= std::min(p, q) + nn; ++k)
                    for (long j = std::max(0L, p + q - k); j <= std::min(p, q); ++j) {
                        Multiform lhs = c.cal.pCodiff(c.kernels.omegaJTotal(p, q, k, j));
                        Multiform rhs =
                            (wedge(b.Istar, c.kernels.omegaJTotal(p, q, k - 1, j)) *
                                 Scalar((k - (p + q) + j) * (k - j - (nn + 1))) +
                             wedge(b.Istar, c.kernels.omegaJTotal(p, q, k - 1, j + 1)) *
                                 Scalar((p - j) * (q - j))) *
                            cGlobal;
                        if (lhs != rhs)
                            return CheckResult::discrepancy(
                                "proportionality fails at (p,q,k,j) = (" + std::to_string(p) +
                                "," + std::to_string(q) + "," + std::to_string(k) + "," +
                                std::to_string(j) + ")");
                    }
        return CheckResult::pass();
    });
}

// ------------------------------------------------------------- low kernels

void addMainOneChecks(Registry& r) {
    auto forEachLow = [](const CheckContext& c,
                         const std::function<CheckResult(long, long, const Multiform&)>& fn) {
        for (long p = 0; p <= c.n(); ++p)
            for (long q = 0; p + q <= c.n(); ++q) {
                CheckResult res = fn(p, q, c.kernels.kernelLow(p, q));
                if (res.status != CheckStatus::Pass) return res;
            }
        return CheckResult::pass();
    };

    r.add("main1.dstarP", "Thm. (main1)", [forEachLow](const CheckContext& c) {
        return forEachLow(c, [&](long, long, const Multiform& phi) {
            return formZero(c.cal.pCodiff(phi), "dP* phi");
        });
    });
    r.add("main1.dstarP_dP", "Thm. (main1)", [forEachLow](const CheckContext& c) {
        return forEachLow(c, [&](long, long, const Multiform& phi) {
            return formZero(c.cal.pCodiff(c.cal.dP(phi)), "dP* dP phi");
        });
    });
    r.add("main1.census", "Thm. (main1)", [forEachLow](const CheckContext& c) {
        return forEachLow(c, [&](long p, long q, const Multiform& phi) {
            StratumFilter f;
            f.bidegree = {static_cast<int>(p + q), static_cast<int>(2 * c.n() + 1 - (p + q))};
            f.kType = {static_cast<int>(p), static_cast<int>(q)};
            if (phi.isZero() || project(phi, f) != phi)
                return CheckResult::discrepancy("low kernel has wrong bidegree or K-type");
            return CheckResult::pass();
        });
    });
    r.add("below.deltaK", "Prop. (properties_below_half)", [forEachLow](const CheckContext& c) {
        return forEachLow(c, [&](long, long, const Multiform& phi) {
            return formZero(c.hodge.deltaK(phi), "deltaK phi");
        });
    });
    r.add("below.primitive", "Prop. (properties_below_half)",
          [forEachLow](const CheckContext& c) {
              return forEachLow(c, [&](long, long, const Multiform& phi) {
                  return formZero(c.hodge.lefschetzKAdj(phi), "L_K* phi");
              });
          });
}

// ------------------------------------------------------------ high kernels

std::vector<std::pair<Scalar, Scalar>> highParameterSet() {
    return {{Scalar(1), Scalar(0)},
            {Scalar(0), Scalar(1)},
            {Scalar(2), Scalar(Rational(0), Rational(3))}};
}

void addMainTwoChecks(Registry& r) {
    auto forEachHigh = [](const CheckContext& c,
                          const std::function<CheckResult(long, long, const Scalar&,
                                                          const Scalar&, const Multiform&)>& fn) {
        for (long p = 0; p <= c.n() + 1; ++p)
            for (long q = std::max(0L, c.n() + 1 - p); q <= c.n() + 1; ++q) {
                for (const auto& [a, bpar] : highParameterSet()) {
                    CheckResult res = fn(p, q, a, bpar, c.kernels.kernelHigh(p, q, a, bpar));
                    if (res.status != CheckStatus::Pass) return res;
                }
            }
        return CheckResult::pass();
    };

    r.add("main2.dstarP", "Thm. (main2)", [forEachHigh](const CheckContext& c) {
        return forEachHigh(c, [&](long, long, const Scalar&, const Scalar&, const Multiform& phi) {
            return formZero(c.cal.pCodiff(phi), "dP* phi");
        });
    });
    r.add("main2.dstarP_dP", "Thm. (main2)", [forEachHigh](const CheckContext& c) {
        return forEachHigh(c, [&](long, long, const Scalar&, const Scalar&, const Multiform& phi) {
            return formZero(c.cal.pCodiff(c.cal.dP(phi)), "dP* dP phi");
        });
    });
    r.add("main2.linearity", "Thm. (main2)", [](const CheckContext& c) {
        const long p = c.n(), q = 1;
        Scalar a(2), bpar(Rational(0), Rational(3));
        Multiform lhs = c.kernels.kernelHigh(p, q, a, bpar);
        Multiform rhs = c.kernels.kernelHigh(p, q, Scalar(1), Scalar(0)) * a +
                        c.kernels.kernelHigh(p, q, Scalar(0), Scalar(1)) * bpar;
        return formsEqual(lhs, rhs, true);
    });
    r.add("above.coprimitive", "Prop. (properties_above_half)",
          [forEachHigh](const CheckContext& c) {
              return forEachHigh(
                  c, [&](long, long, const Scalar&, const Scalar&, const Multiform& phi) {
                      return formZero(wedge(c.cal.basic().omegaK, phi), "omega_M ^ phi");
                  });
          });
    r.add("above.dstarK_beta_indep", "Prop. (properties_above_half)",
          [](const CheckContext& c) {
              for (long p = 0; p <= c.n() + 1; ++p)
                  for (long q = std::max(0L, c.n() + 1 - p); q <= c.n() + 1; ++q) {
                      Multiform betaOnly = c.kernels.kernelHigh(p, q, Scalar(0), Scalar(1));
                      CheckResult res =
                          formZero(c.hodge.delStarK(betaOnly), "dstarK of the beta family");
                      if (res.status != CheckStatus::Pass) return res;
                  }
              return CheckResult::pass();
          });
    r.add("above.dbarstarK_alpha_indep", "Prop. (properties_above_half)",
          [](const CheckContext& c) {
              for (long p = 0; p <= c.n() + 1; ++p)
                  for (long q = std::max(0L, c.n() + 1 - p); q <= c.n() + 1; ++q) {
                      Multiform alphaOnly = c.kernels.kernelHigh(p, q, Scalar(1), Scalar(0));
                      CheckResult res = formZero(c.hodge.delBarStarK(alphaOnly),
                                                 "dbarstarK of the alpha family");
                      if (res.status != CheckStatus::Pass) return res;
                  }
              return CheckResult::pass();
          });
    r.add("above.rel_codiff", "eq. (relation_t_pi_codifferential)", [](const CheckContext& c) {
        for (const Scalar& a : {Scalar(1), Scalar(2, Rational(3))}) {
            for (long p = 0; p <= c.n(); ++p)
                for (long q = std::max(0L, c.n() - p); q <= c.n(); ++q) {
                    Multiform lhs =
                        c.hodge.delStarK(c.kernels.kernelHigh(p + 1, q, a, Scalar(0)));
                    Multiform rhs =
                        c.hodge.delBarStarK(c.kernels.kernelHigh(p, q + 1, Scalar(0), a));
                    if (lhs != rhs) return CheckResult::discrepancy(diffWitness(lhs, rhs));
                }
        }
        return CheckResult::pass();
    });
    r.add("above.rel_deriv", "eq. (relation_t_pi_derivatives)", [](const CheckContext& c) {
        const long nn = c.n();
        const Scalar i = Scalar::i();
        for (const Scalar& bpar : {Scalar(1), Scalar(Rational(0), Rational(3))}) {
            for (long p = 1; p <= nn + 1; ++p)
                for (long q = std::max(0L, nn + 2 - p); q <= nn + 1; ++q) {
                    if (p - 1 + q < nn + 1) continue;
                    Multiform lhs =
                        c.cal.delK(c.kernels.kernelHigh(p - 1, q, Scalar(0), bpar)) *
                        (i * Scalar(-2) * Scalar(nn + 1 - p));
                    Multiform rhs = c.cal.dP(c.kernels.kernelHigh(p, q, Scalar(0), bpar)) *
                                    Scalar(p + q - nn);
                    if (lhs != rhs)
                        return CheckResult::discrepancy(
                            "fails at (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                            "): " + diffWitness(lhs, rhs));
                }
        }
        return CheckResult::pass();
    });
}

// ------------------------------------------------------------- real kernels

void addRealChecks(Registry& r) {
    r.add("real.reality", "real-kernel theorem (i)", [](const CheckContext& c) {
        for (long k = 0; k <= 2 * c.n(); ++k) {
            Multiform phi = c.kernels.kernelReal(k);
            if (conjugate(phi) != phi)
                return CheckResult::discrepancy("phi_" + std::to_string(k) + " is not real");
        }
        return CheckResult::pass();
    });
    r.add("real.coclosed", "real-kernel theorem (i)", [](const CheckContext& c) {
        if (c.n() > 3) return CheckResult::skipped("real-kernel operator checks run for n <= 3");
        for (long k = 0; k <= 2 * c.n(); ++k)
            if (!c.hodge.deltaK(c.kernels.kernelReal(k)).isZero())
                return CheckResult::discrepancy("deltaK phi_" + std::to_string(k) + " != 0");
        return CheckResult::pass();
    });
    r.add("real.primitive_coprimitive", "real-kernel theorem (i)", [](const CheckContext& c) {
        if (c.n() > 3) return CheckResult::skipped("real-kernel operator checks run for n <= 3");
        for (long k = 0; k <= 2 * c.n(); ++k) {
            Multiform phi = c.kernels.kernelReal(k);
            if (k <= c.n()) {
                if (!c.hodge.lefschetzKAdj(phi).isZero())
                    return CheckResult::discrepancy("phi_" + std::to_string(k) +
                                                    " is not primitive");
            } else {
                if (!c.hodge.lefschetzK(phi).isZero())
                    return CheckResult::discrepancy("phi_" + std::to_string(k) +
                                                    " is not coprimitive");
            }
        }
        return CheckResult::pass();
    });
    r.add("real.ladder", "real-kernel theorem (ii)", [](const CheckContext& c) {
        if (c.n() > 3) return CheckResult::skipped("real-kernel operator checks run for n <= 3");
        std::string bad;
        for (long k = 0; k <= 2 * c.n(); ++k) {
            Multiform lhs = c.cal.dK(c.kernels.kernelRealAny(k));
            Multiform rhs =
                c.cal.dP(c.kernels.kernelRealAny(k + 1)) * Scalar(c.kernels.ladderConstant(k));
            if (lhs != rhs) {
                bad += " k=" + std::to_string(k) + ": " + diffWitness(lhs, rhs);
            }
        }
        if (bad.empty()) return CheckResult::pass();
        return CheckResult::discrepancy("ladder fails at" + bad);
    });
}

// ----------------------------------------------------------------- appendix

void addAppendixChecks(Registry& r) {
    r.add("appendix.star_vol", "eq. (volume_form)", [](const CheckContext& c) {
        const BasicForms& b = c.cal.basic();
        Multiform volFormula =
            wedge(wedge(b.Zstar, b.Zbarstar) * Scalar::i(), wedgePow(b.w20, c.n())) *
            Scalar(Rational(1, (mpz_class(1) << (c.n() + 1)) * mpz_class(factorialRational(c.n()))));
        if (c.hodge.starK(Multiform::one(c.n())) != b.volK || b.volK != volFormula)
            return CheckResult::discrepancy("*1 does not reproduce the printed volume form");
        return CheckResult::pass();
    });

    r.add("appendix.star_base", "Lemma A.1", [](const CheckContext& c) {
        const BasicForms& b = c.cal.basic();
        for (int k = 0; k <= c.n(); ++k) {
            Multiform lhs = c.hodge.starK(wedgePow(b.w20, k));
            Rational coeff = Rational(mpz_class(1) << (2 * k)) /
                             Rational(mpz_class(1) << (c.n() + 1)) * factorialRational(k) /
                             factorialRational(c.n() - k);
            Multiform rhs = wedge(wedge(b.Zstar, b.Zbarstar) * Scalar::i(),
                                  wedgePow(b.w20, c.n() - k)) *
                            Scalar(coeff);
            if (lhs != rhs) return CheckResult::discrepancy(diffWitness(lhs, rhs));
        }
        return CheckResult::pass();
    });

    r.add("appendix.lemA1", "Lemma A.1", [](const CheckContext& c) {
        const long nn = c.n();
        GeneratorTable g = c.cal.model().gens();
        const BasicForms& b = c.cal.basic();
        for (long p = 0; p <= nn; ++p)
            for (long q = 0; q <= nn; ++q)
                for (long k = std::max(p, q); k <= std::min(p + q, std::min(p, q) + nn); ++k) {
                    // j = p+q-k >= 0 within admissibility.
                    Multiform star = c.hodge.starK(c.kernels.omegaJTotal(p, q, k, p + q - k));
                    long e1 = ((p + q) * (p + q + 1)) / 2 - (p + q - k);
                    Rational mag = Rational(factorialRational(p + q - k) *
                                            factorialRational(k - p) * factorialRational(k - q)) /
                                   factorialRational(nn - (p + q) + k);
                    int twoExp = static_cast<int>(p + q - (nn + 1));
                    Rational two = twoExp >= 0 ? Rational(mpz_class(1) << twoExp)
                                               : Rational(1, mpz_class(1) << (-twoExp));
                    Scalar eps = Scalar(mag * two);
                    if (e1 % 2 != 0) eps = -eps;
                    Multiform power = wedgePow(b.w20, static_cast<int>(nn - (p + q) + k));
                    Multiform zz = wedge(b.Zstar, b.Zbarstar) * Scalar::i();
                    for (const auto& xs : tuples(static_cast<int>(nn), static_cast<int>(k - p)))
                        for (const auto& ys :
                             tuples(static_cast<int>(nn), static_cast<int>(k - q))) {
                            std::vector<int> gx, gy, fx, fy;
                            for (int s : xs) {
                                gx.push_back(g.gHol(s));
                                fx.push_back(g.fHol(s));
                            }
                            for (int s : ys) {
                                gy.push_back(g.gAnti(s));
                                fy.push_back(g.fAnti(s));
                            }
                            Multiform lhs = insertChain(gx, insertChain(gy, star));
                            Multiform rhs =
                                wedge(zz, insertChain(fx, insertChain(fy, power))) * eps;
                            if (lhs != rhs)
                                return CheckResult::discrepancy(
                                    "fails at (p,q,k) = (" + std::to_string(p) + "," +
                                    std::to_string(q) + "," + std::to_string(k) + "): " +
                                    diffWitness(lhs, rhs));
                        }
                }
        return CheckResult::pass();
    });

    auto forAllOmega = [](const CheckContext& c,
                          const std::function<CheckResult(long, long, long, long)>& fn) {
        const long nn = c.n();
        for (long p = 0; p <= nn; ++p)
            for (long q = 0; q <= nn; ++q)
                for (long k = std::max(p, q); k <= std::min(p, q) + nn; ++k)
                    for (long j = std::max(0L, p + q - k); j <= std::min(p, q); ++j) {
                        CheckResult res = fn(p, q, k, j);
                        if (res.status != CheckStatus::Pass) return res;
                    }
        return CheckResult::pass();
    };

    auto idxWitness = [](long p, long q, long k, long j, const Multiform& lhs,
                         const Multiform& rhs) {
        return "fails at (p,q,k,j) = (" + std::to_string(p) + "," + std::to_string(q) + "," +
               std::to_string(k) + "," + std::to_string(j) + "): " + diffWitness(lhs, rhs);
    };

    r.add("appendix.thmA2.i", "Thm. A.2 (i)", [forAllOmega, idxWitness](const CheckContext& c) {
        const Scalar i2 = Scalar::i() * Scalar(2);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs =
                wedge(c.cal.basic().w11, c.hodge.starK(c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs = (c.hodge.starK(c.kernels.omegaJTotal(p, q - 1, k, j - 1)) * Scalar(j) +
                             c.hodge.starK(c.kernels.omegaJTotal(p, q - 1, k, j)) * Scalar(q - j)) *
                            i2;
            if ((p + q) % 2 != 0) rhs = -rhs;
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    r.add("appendix.thmA2.ii", "Thm. A.2 (ii)", [forAllOmega, idxWitness](const CheckContext& c) {
        const Scalar i2 = Scalar::i() * Scalar(2);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs =
                wedge(c.cal.basic().w11bar, c.hodge.starK(c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs = (c.hodge.starK(c.kernels.omegaJTotal(p - 1, q, k, j - 1)) * Scalar(j) +
                             c.hodge.starK(c.kernels.omegaJTotal(p - 1, q, k, j)) * Scalar(p - j)) *
                            i2;
            if ((p + q) % 2 == 0) rhs = -rhs;
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    r.add("appendix.thmA2.iii", "Thm. A.2 (iii)",
          [forAllOmega, idxWitness](const CheckContext& c) {
              return forAllOmega(c, [&](long p, long q, long k, long j) {
                  Multiform lhs =
                      wedge(c.cal.basic().w20, c.hodge.starK(c.kernels.omegaJTotal(p, q, k, j)));
                  Multiform rhs =
                      c.hodge.starK(c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j - 1)) *
                          Scalar(4 * j * (c.n() + 1 - (p + q) + j)) -
                      c.hodge.starK(c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j)) *
                          Scalar(4 * (p - j) * (q - j));
                  if (lhs != rhs)
                      return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
                  return CheckResult::pass();
              });
          });

    // Prop. A.3: the five displayed dstarK formulas.
    r.add("appendix.propA3.f1", "Prop. A.3", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        const Scalar i2 = Scalar::i() * Scalar(2);
        Multiform zz = wedge(b.Zstar, b.Zbarstar);
        Multiform izz = wedge(b.Istar, zz);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs =
                c.hodge.delStarK(wedge(zz, c.kernels.omegaJTotal(p, q, k, j)));
            Multiform common =
                wedge(b.Zbarstar, c.kernels.omegaJTotal(p, q, k, j)) * Scalar(2 * (nn - k)) +
                wedge(izz, c.kernels.omegaJTotal(p - 1, q, k - 1, j - 1)) *
                    (i2 * Scalar(j * (k - (p + q) + j)));
            Multiform rhs = common - wedge(izz, c.kernels.omegaJTotal(p - 1, q, k - 1, j)) *
                                         (i2 * Scalar((p - j) * (nn - k + p - j + 1)));
            if (lhs != rhs) {
                Multiform variant =
                    common - wedge(izz, c.kernels.omegaJTotal(p - 1, q, k - 1, j)) *
                                 (i2 * Scalar((p - j) * (nn - k + q - j + 1)));
                std::string note =
                    lhs == variant
                        ? "; machine agrees with coefficient (p-j)(n-k+q-j+1) instead"
                        : "";
                return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs) + note);
            }
            return CheckResult::pass();
        });
    });
    r.add("appendix.propA3.f2", "Prop. A.3", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        const Scalar i2 = Scalar::i() * Scalar(2);
        Multiform zz = wedge(b.Zstar, b.Zbarstar);
        Multiform iz = wedge(b.Istar, b.Zstar);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs = c.hodge.delStarK(wedge(b.Zstar, c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs =
                c.kernels.omegaJTotal(p, q, k, j) * Scalar(2 * (nn + 1 - k)) +
                wedge(zz, c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j - 1)) *
                    (i2 * Scalar(j * (nn + 1 - (p + q) + j))) -
                wedge(zz, c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j)) *
                    (i2 * Scalar((p - j) * (q - j))) +
                wedge(iz, c.kernels.omegaJTotal(p - 1, q, k - 1, j - 1)) *
                    (i2 * Scalar(j * (k - (p + q) + j))) -
                wedge(iz, c.kernels.omegaJTotal(p - 1, q, k - 1, j)) *
                    (i2 * Scalar((p - j) * (nn - k + q - j + 1)));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    r.add("appendix.propA3.f3", "Prop. A.3", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        const Scalar i2 = Scalar::i() * Scalar(2);
        Multiform izb = wedge(b.Istar, b.Zbarstar);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs =
                c.hodge.delStarK(wedge(b.Zbarstar, c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs = wedge(izb, c.kernels.omegaJTotal(p - 1, q, k - 1, j - 1)) *
                                (i2 * Scalar(j * (k - (p + q) + j))) -
                            wedge(izb, c.kernels.omegaJTotal(p - 1, q, k - 1, j)) *
                                (i2 * Scalar((p - j) * (nn - k + q - j + 1)));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    r.add("appendix.propA3.f4", "Prop. A.3", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        const Scalar i2 = Scalar::i() * Scalar(2);
        Multiform izb = wedge(b.Istar, b.Zbarstar);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs = c.hodge.delStarK(wedge(b.Istar, c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs = wedge(izb, c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j - 1)) *
                                (i2 * Scalar(j * (nn + 1 - (p + q) + j))) -
                            wedge(izb, c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j)) *
                                (i2 * Scalar((p - j) * (q - j)));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    r.add("appendix.propA3.f5", "Prop. A.3", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        const BasicForms& b = c.cal.basic();
        Multiform izz = wedge(b.Istar, wedge(b.Zstar, b.Zbarstar));
        Multiform izb = wedge(b.Istar, b.Zbarstar);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs = c.hodge.delStarK(wedge(izz, c.kernels.omegaJTotal(p, q, k, j)));
            Multiform rhs =
                wedge(izb, c.kernels.omegaJTotal(p, q, k, j)) * Scalar(2 * (k - nn + 1));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });

    // Prop. A.4: the adjoint Lefschetz formulas.
    r.add("appendix.propA4.f1", "Prop. A.4", [forAllOmega, idxWitness](const CheckContext& c) {
        const long nn = c.n();
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform lhs = c.hodge.lefschetzKAdj(c.kernels.omegaJTotal(p, q, k, j));
            Multiform rhs = c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j - 1) *
                                Scalar(2 * j * (nn + 1 - (p + q) + j)) -
                            c.kernels.omegaJTotal(p - 1, q - 1, k - 1, j) *
                                Scalar(2 * (p - j) * (q - j));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });
    auto passThrough = [forAllOmega, idxWitness](const CheckContext& c, int which) {
        const BasicForms& b = c.cal.basic();
        const Multiform& pre = which == 0 ? b.Zstar : which == 1 ? b.Zbarstar : b.Istar;
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform w = c.kernels.omegaJTotal(p, q, k, j);
            Multiform lhs = c.hodge.lefschetzKAdj(wedge(pre, w));
            Multiform rhs = wedge(pre, c.hodge.lefschetzKAdj(w));
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    };
    r.add("appendix.propA4.f2", "Prop. A.4",
          [passThrough](const CheckContext& c) { return passThrough(c, 0); });
    r.add("appendix.propA4.f3", "Prop. A.4",
          [passThrough](const CheckContext& c) { return passThrough(c, 1); });
    r.add("appendix.propA4.f4", "Prop. A.4",
          [passThrough](const CheckContext& c) { return passThrough(c, 2); });
    r.add("appendix.propA4.f5", "Prop. A.4", [forAllOmega, idxWitness](const CheckContext& c) {
        const BasicForms& b = c.cal.basic();
        Multiform izz = wedge(b.Istar, wedge(b.Zstar, b.Zbarstar));
        const Scalar i2 = Scalar::i() * Scalar(2);
        return forAllOmega(c, [&](long p, long q, long k, long j) {
            Multiform w = c.kernels.omegaJTotal(p, q, k, j);
            Multiform lhs = c.hodge.lefschetzKAdj(wedge(izz, w));
            Multiform rhs =
                wedge(izz, c.hodge.lefschetzKAdj(w)) - wedge(b.Istar, w) * i2;
            if (lhs != rhs) return CheckResult::discrepancy(idxWitness(p, q, k, j, lhs, rhs));
            return CheckResult::pass();
        });
    });

    r.add("appendix.lefschetz_def", "§3.2, L_K* := -*_K L_K *_K", [](const CheckContext& c) {
        // The printed sandwich equals the metric adjoint only on odd
        // K-degrees; the even strata inherit the *_K*_K sign.
        std::string parities;
        bool agreeEverywhere = true;
        for (int p = 0; p <= c.n() + 1; ++p)
            for (int q = 0; q <= c.n() + 1; ++q) {
                StratumFilter f;
                f.kType = {p, q};
                f.pType = {0, 0};
                f.hasI = false;
                std::vector<Mask> monos = c.cal.strataMonomials(f);
                if (monos.empty()) continue;
                Multiform mono = Multiform::monomial(c.n(), monos.front());
                bool agree = c.hodge.lefschetzKAdj(mono) == c.hodge.lefschetzKAdjSandwich(mono);
                if (!agree) {
                    agreeEverywhere = false;
                    parities += "(" + std::to_string(p) + "," + std::to_string(q) + ") ";
                }
            }
        if (agreeEverywhere) return CheckResult::pass();
        return CheckResult::discrepancy(
            "printed sandwich differs from the metric adjoint on even K-types: " + parities);
    });

    r.add("appendix.star_square", "§3.2, the inverse of *_K is -*_K",
          [](const CheckContext& c) {
              std::string table;
              bool blanketHolds = true;
              for (int p = 0; p <= c.n() + 1; ++p)
                  for (int q = 0; q <= c.n() + 1; ++q) {
                      Scalar s = c.hodge.starSquareSign(p, q);
                      table += "(" + std::to_string(p) + "," + std::to_string(q) +
                               "):" + s.str() + " ";
                      if (s != Scalar(-1)) blanketHolds = false;
                  }
              if (blanketHolds) return CheckResult::pass();
              return CheckResult::discrepancy("*_K*_K per K-type: " + table);
          });
}

// --------------------------------------------------------------- invariance

void addInvarianceChecks(Registry& r) {
    r.add("invariance.kernels", "§3.1, M-invariant kernel values", [](const CheckContext& c) {
        for (long p = 0; p <= c.n(); ++p)
            for (long q = 0; p + q <= c.n(); ++q)
                if (!c.cal.isInvariant(c.kernels.kernelLow(p, q)))
                    return CheckResult::fail("low kernel not m-invariant");
        for (long p = 0; p <= c.n() + 1; ++p)
            for (long q = std::max(0L, c.n() + 1 - p); q <= c.n() + 1; ++q)
                for (const auto& [a, bpar] : highParameterSet())
                    if (!c.cal.isInvariant(c.kernels.kernelHigh(p, q, a, bpar)))
                        return CheckResult::fail("high kernel not m-invariant");
        if (c.n() <= 2)
            for (long k = 0; k <= 2 * c.n() + 1; ++k)
                if (!c.cal.isInvariant(c.kernels.kernelRealAny(k)))
                    return CheckResult::fail("real kernel not m-invariant");
        return CheckResult::pass();
    });

    r.add("invariance.d_squared", "plumbing", [](const CheckContext& c) {
        // d composed with itself vanishes on enumerated invariant forms:
        // every refined stratum for n <= 2, kernels everywhere.
        if (c.n() <= 2) {
            GeneratorTable g = c.cal.model().gens();
            std::set<Stratum> seen;
            Multiform probe(c.n());
            for (Mask m = 0; m < (Mask(1) << g.count()); ++m) {
                Stratum s = probe.stratumOf(m);
                if (!seen.insert(s).second) continue;
                StratumFilter f;
                f.bidegree = {s.kDeg, s.pDeg};
                f.kType = {s.kHol, s.kAnti};
                f.pType = {s.gHol, s.gAnti};
                f.hasI = s.hasI;
                for (const Multiform& b : c.cal.invariantSubspace(f))
                    if (!c.cal.d(c.cal.d(b)).isZero())
                        return CheckResult::fail("d*d nonzero on an invariant form");
            }
        }
        for (long p = 0; p <= c.n(); ++p)
            for (long q = 0; p + q <= c.n(); ++q)
                if (!c.cal.d(c.cal.d(c.kernels.kernelLow(p, q))).isZero())
                    return CheckResult::fail("d*d nonzero on a low kernel");
        for (long p = 0; p <= c.n() + 1; ++p)
            for (long q = std::max(0L, c.n() + 1 - p); q <= c.n() + 1; ++q)
                for (const auto& [a, bpar] : highParameterSet())
                    if (!c.cal.d(c.cal.d(c.kernels.kernelHigh(p, q, a, bpar))).isZero())
                        return CheckResult::fail("d*d nonzero on a high kernel");
        return CheckResult::pass();
    });

    r.add("invariance.dims", "§3.1, M-invariant elements", [](const CheckContext& c) {
        StratumFilter f01;
        f01.bidegree = {0, 1};
        std::vector<Multiform> b01 = c.cal.invariantSubspace(f01);
        if (b01.size() != 1)
            return CheckResult::fail("bidegree (0,1) invariants have dim != 1");
        GeneratorTable g = c.cal.model().gens();
        if (b01[0].v.terms.size() != 1 ||
            b01[0].v.terms.begin()->first != (Mask(1) << g.iGen()))
            return CheckResult::fail("bidegree (0,1) invariants are not spanned by I*");
        StratumFilter f10;
        f10.bidegree = {1, 0};
        if (c.cal.invariantSubspace(f10).size() != 2)
            return CheckResult::fail("bidegree (1,0) invariants have dim != 2");
        return CheckResult::pass();
    });
}

}  // namespace

const std::vector<CheckDef>& checkRegistry() {
    static const std::vector<CheckDef> defs = [] {
        Registry r;
        addStructureChecks(r);
        addTableOneChecks(r);
        addDerivativeChecks(r);
        addCodiffChecks(r);
        addHomologyChecks(r);
        addPCodiffChecks(r);
        addKappaChecks(r);
        addLemma41Checks(r);
        addMainOneChecks(r);
        addMainTwoChecks(r);
        addRealChecks(r);
        addAppendixChecks(r);
        addInvarianceChecks(r);
        std::sort(r.defs.begin(), r.defs.end(),
                  [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
        return r.defs;
    }();
    return defs;
}

const std::vector<std::string>& requiredAnchors() {
    static const std::vector<std::string> anchors = {
        "eq. (def-codiff)",
        "eq. (tech-codiff)",
        "Lemma 2.3",
        "Prop. (homology_bundles)",
        "Table 1",
        "§3.4 derivative tables",
        "Prop. 4.1",
        "Prop. (relation_omega)",
        "Lemma (recursion_kappa)",
        "Lemma (4.1)",
        "Thm. (main1)",
        "Thm. (main2)",
        "Prop. (properties_below_half)",
        "Prop. (properties_above_half)",
        "eq. (relation_t_pi_derivatives)",
        "eq. (relation_t_pi_codifferential)",
        "real-kernel theorem (i)",
        "real-kernel theorem (ii)",
        "Lemma A.1",
        "Thm. A.2 (i)",
        "Thm. A.2 (ii)",
        "Thm. A.2 (iii)",
        "Prop. A.3",
        "Prop. A.4",
    };
    return anchors;
}

std::vector<std::string> suiteNames() {
    std::set<std::string> names;
    for (const auto& def : checkRegistry()) {
        // Suite = id with the last dotted component removed, truncated at the
        // first component for listing.
        auto pos = def.id.find('.');
        std::string first = def.id.substr(0, pos);
        if (first == "section3" || first == "prop4") {
            auto pos2 = def.id.find('.', pos + 1);
            names.insert(def.id.substr(0, pos2));
        } else {
            names.insert(first);
        }
    }
    names.insert("all");
    return {names.begin(), names.end()};
}

static bool suiteMatches(const std::string& suite, const std::string& id) {
    if (suite == "all") return true;
    if (id == suite) return true;
    return id.size() > suite.size() && id.compare(0, suite.size(), suite) == 0 &&
           id[suite.size()] == '.';
}

bool knownSuite(const std::string& suite) {
    if (suite == "all") return true;
    for (const auto& def : checkRegistry())
        if (suiteMatches(suite, def.id)) return true;
    return false;
}

Report runSuite(int n, const std::string& suite, std::uint64_t seed, int maxRank) {
    if (!knownSuite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    Calculus cal(buildModel(n, maxRank));
    Hodge hodge(cal);
    KernelFactory kernels(cal);
    PPlusAlgebra pplus(n);
    CheckContext ctx{cal, hodge, kernels, pplus, seed};

    Report rep;
    rep.n = n;
    rep.suite = suite;
    rep.version = kVersion;
    rep.seed = seed;
    for (const auto& def : checkRegistry()) {
        if (!suiteMatches(suite, def.id)) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = def.run(ctx);
        } catch (const std::exception& e) {
            res = CheckResult::fail(std::string("exception: ") + e.what());
        }
        res.elapsedMs = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
        rep.checks.push_back({def.id, def.anchor, res});
    }
    return rep;
}

}  // namespace crp
