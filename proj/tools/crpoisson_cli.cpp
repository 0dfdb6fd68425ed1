#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "crpoisson/checks.hpp"
#include "json.hpp"

using namespace crp;

namespace {

Scalar parseScalar(const std::string& text) {
    // "re" or "re,im" with exact rational components, e.g. "2", "0,3", "-1/2,3/4".
    auto comma = text.find(',');
    std::string re = comma == std::string::npos ? text : text.substr(0, comma);
    std::string im = comma == std::string::npos ? "0" : text.substr(comma + 1);
    Rational r, i;
    if (r.set_str(re, 10) != 0 || i.set_str(im, 10) != 0)
        throw CLI::ValidationError("expected rational scalar like '2', '-1/2' or '0,3'");
    r.canonicalize();
    i.canonicalize();
    return Scalar(r, i);
}

nlohmann::ordered_json kernelJson(const Multiform& f, const std::string& family) {
    GeneratorTable g = f.gens();
    nlohmann::ordered_json j;
    j["n"] = f.n;
    j["family"] = family;
    auto terms = nlohmann::ordered_json::array();
    std::vector<Mask> masks;
    for (const auto& [m, c] : f.v.terms) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](Mask x, Mask y) {
        int dx = std::popcount(x), dy = std::popcount(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    for (Mask m : masks) {
        auto legs = nlohmann::ordered_json::array();
        Mask rest = m;
        while (rest) {
            int leg = std::countr_zero(rest);
            rest &= rest - 1;
            legs.push_back(g.name(leg));
        }
        const Scalar& c = f.v.coeff(m);
        terms.push_back({legs, c.re.get_str(), c.im.get_str()});
    }
    j["terms"] = std::move(terms);
    return j;
}

void printStratumCensus(const Multiform& f) {
    std::map<Stratum, int> census;
    for (const auto& [m, c] : f.v.terms) census[f.stratumOf(m)]++;
    std::cout << "bidegree,K-type,P-type,has-I,monomials\n";
    for (const auto& [s, count] : census)
        std::cout << s.kDeg << ":" << s.pDeg << "," << s.kHol << ":" << s.kAnti << "," << s.gHol
                  << ":" << s.gAnti << "," << (s.hasI ? 1 : 0) << "," << count << "\n";
}

int runVerify(int n, std::string suite, std::uint64_t seed, bool strict, bool timings,
              const std::string& reportPath, const std::string& format, int maxRank) {
    Report rep = runSuite(n, suite, seed, maxRank);
    std::string text = reportToText(rep);
    std::cout << text;
    if (!reportPath.empty()) {
        if (format == "json")
            writeFile(reportPath, reportToJson(rep, timings));
        else
            writeFile(reportPath, text);
        std::cout << "report written to " << reportPath << "\n";
    }
    if (rep.anyFail()) return 1;
    if (strict && rep.anyDiscrepancy()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the invariant-form calculus on G/M, G = SU(n+1,1)"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named check suite");
    int vn = 1;
    std::string suite = "all";
    std::uint64_t seed = 0;
    bool strict = false, timings = false, big = false;
    std::string reportPath, format = "json";
    verify->add_option("--n", vn, "rank (1..3; pass --big for n = 4)")->required();
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--seed", seed, "seed for randomized evaluations");
    verify->add_flag("--strict", strict, "treat discrepancies as failures");
    verify->add_flag("--timings", timings,
                     "include elapsed_ms in the JSON report (breaks byte-determinism)");
    verify->add_flag("--big", big, "allow n = 4 (monomial space 2^19; slow)");
    verify->add_option("--report", reportPath, "write the report to this path");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    // invariants
    auto* invariants = app.add_subcommand("invariants", "invariant-subspace dimension census");
    int in = 1;
    std::string bidegree;
    invariants->add_option("--n", in, "rank")->required();
    invariants->add_option("--bidegree", bidegree, "restrict to bidegree i,j");

    // kernel
    auto* kernel = app.add_subcommand("kernel", "construct a Poisson kernel");
    std::string family;
    int kn = 1;
    std::optional<long> kp, kq, kk;
    std::string alphaText = "1", betaText = "0", outPath;
    bool stratum = false;
    kernel->add_option("family", family, "kernel family")
        ->required()
        ->check(CLI::IsMember({"low", "high", "real"}));
    kernel->add_option("--n", kn, "rank")->required();
    kernel->add_option("--p", kp, "holomorphic K-type");
    kernel->add_option("--q", kq, "antiholomorphic K-type");
    kernel->add_option("--k", kk, "degree (real family)");
    kernel->add_option("--alpha", alphaText, "alpha parameter, 're' or 're,im'");
    kernel->add_option("--beta", betaText, "beta parameter, 're' or 're,im'");
    kernel->add_option("--out", outPath, "write canonical JSON serialization here");
    kernel->add_flag("--stratum", stratum, "print the bidegree/type census");

    // model
    auto* model = app.add_subcommand("model", "export structure constants and pairing table");
    int mn = 1;
    std::string exportPath;
    model->add_option("--n", mn, "rank")->required();
    model->add_option("--export", exportPath, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            int maxRank = big ? 4 : 3;
            if (vn < 1 || vn > maxRank) {
                std::cerr << "rank out of range (use --big for n = 4)\n";
                return 2;
            }
            return runVerify(vn, suite, seed, strict, timings, reportPath, format, maxRank);
        }

        if (invariants->parsed()) {
            Calculus cal(buildModel(in));
            StratumFilter base;
            if (!bidegree.empty()) {
                auto comma = bidegree.find(',');
                if (comma == std::string::npos) {
                    std::cerr << "--bidegree expects i,j\n";
                    return 2;
                }
                base.bidegree = {std::stoi(bidegree.substr(0, comma)),
                                 std::stoi(bidegree.substr(comma + 1))};
            }
            // Group monomials into refined strata, solve each cell.
            std::map<Stratum, int> cells;
            Multiform probe(in);
            GeneratorTable g(in);
            for (Mask m = 0; m < (Mask(1) << g.count()); ++m) {
                Stratum s = probe.stratumOf(m);
                if (base.matches(s)) cells[s]++;
            }
            std::cout << "bidegree,K-type,P-type,has-I,dim\n";
            for (const auto& [s, count] : cells) {
                StratumFilter f;
                f.bidegree = {s.kDeg, s.pDeg};
                f.kType = {s.kHol, s.kAnti};
                f.pType = {s.gHol, s.gAnti};
                f.hasI = s.hasI;
                size_t dim = cal.invariantSubspace(f).size();
                if (dim == 0) continue;
                std::cout << s.kDeg << ":" << s.pDeg << "," << s.kHol << ":" << s.kAnti << ","
                          << s.gHol << ":" << s.gAnti << "," << (s.hasI ? 1 : 0) << "," << dim
                          << "\n";
            }
            return 0;
        }

        if (kernel->parsed()) {
            Calculus cal(buildModel(kn));
            KernelFactory kf(cal);
            Multiform phi(kn);
            std::string label;
            if (family == "low") {
                if (!kp || !kq) {
                    std::cerr << "low kernel needs --p and --q\n";
                    return 2;
                }
                phi = kf.kernelLow(*kp, *kq);
                label = "low(p=" + std::to_string(*kp) + ",q=" + std::to_string(*kq) + ")";
            } else if (family == "high") {
                if (!kp || !kq) {
                    std::cerr << "high kernel needs --p and --q\n";
                    return 2;
                }
                Scalar a = parseScalar(alphaText), b = parseScalar(betaText);
                phi = kf.kernelHigh(*kp, *kq, a, b);
                label = "high(p=" + std::to_string(*kp) + ",q=" + std::to_string(*kq) +
                        ",alpha=" + a.str() + ",beta=" + b.str() + ")";
            } else {
                if (!kk) {
                    std::cerr << "real kernel needs --k\n";
                    return 2;
                }
                phi = kf.kernelReal(*kk);
                label = "real(k=" + std::to_string(*kk) + ")";
            }
            if (stratum) {
                printStratumCensus(phi);
            } else {
                std::cout << label << ":\n" << serializeMultiform(phi) << "\n";
            }
            if (!outPath.empty()) {
                writeFile(outPath, kernelJson(phi, label).dump(2) + "\n");
                std::cout << "kernel written to " << outPath << "\n";
            }
            return 0;
        }

        if (model->parsed()) {
            LieModel mdl = buildModel(mn);
            GeneratorTable g = mdl.gens();
            nlohmann::ordered_json j;
            j["n"] = mn;
            auto gens = nlohmann::ordered_json::array();
            for (int u = 0; u < g.count(); ++u) gens.push_back(g.name(u));
            j["generators"] = gens;
            auto sc = nlohmann::ordered_json::array();
            for (int u = 0; u < g.count(); ++u)
                for (int v = u + 1; v < g.count(); ++v) {
                    const GenCombo& combo = mdl.quotientBracket(u, v);
                    if (combo.empty()) continue;
                    auto terms = nlohmann::ordered_json::array();
                    for (const auto& [w, c] : combo)
                        terms.push_back({g.name(w), c.re.get_str(), c.im.get_str()});
                    sc.push_back({{"u", g.name(u)}, {"v", g.name(v)}, {"bracket", terms}});
                }
            j["structure_constants"] = sc;
            nlohmann::ordered_json pt;
            pt["B(E,E)"] = pairingB(mdl.repE, mdl.repE).str();
            for (int u = 0; u < g.count(); ++u)
                for (int v = u; v < g.count(); ++v) {
                    Scalar b = pairingB(mdl.rep[static_cast<size_t>(u)],
                                        mdl.rep[static_cast<size_t>(v)]);
                    if (!b.isZero()) pt["B(" + g.name(u) + "," + g.name(v) + ")"] = b.str();
                }
            j["pairing_table"] = pt;
            writeFile(exportPath, j.dump(2) + "\n");
            std::cout << "model written to " << exportPath << "\n";
            return 0;
        }
    } catch (const std::out_of_range& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
