// Command-line front end: Littlewood decomposition, z-asymmetric structure,
// universal-character factorization, SXP expansions and the verification
// sweeps. All results are printed as JSON on stdout; diagnostics go to
// stderr. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "charfact/characters.hpp"
#include "charfact/degree_guard.hpp"
#include "charfact/json_io.hpp"
#include "charfact/littlewood.hpp"
#include "charfact/partition.hpp"
#include "charfact/symfunc.hpp"
#include "charfact/sxp.hpp"
#include "charfact/univchar.hpp"
#include "charfact/verify.hpp"

using namespace charfact;

namespace {

struct Output {
    bool pretty = false;

    void emit(const Json& j) const
    {
        std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    }
};

// "2,3,4" -> {2,3,4}
std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

// "-2..4" (inclusive) or "0,1,2"
std::vector<int> parse_range_or_list(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        return parse_int_list(text);
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

Json report_to_json(const VerifyReport& r)
{
    Json j;
    j["suite"] = r.suite;
    j["instances"] = r.instances;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json fj;
        fj["instance"] = f.instance;
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        fails.push_back(fj);
    }
    j["failures"] = fails;
    j["millis"] = r.millis;
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact partition combinatorics and universal-character factorizations"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    bool json_flag = true;
    int max_degree = degree_cap();
    app.add_flag("--json", json_flag, "machine-readable output (default)");
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_option("--max-degree", max_degree,
                   "cap on character-table degree (guards n! blowup)");

    // decompose
    std::string dc_lambda;
    int dc_t = 2;
    auto* dc = app.add_subcommand("decompose", "Littlewood decomposition: core, quotient, kappa");
    dc->add_option("partition", dc_lambda, "partition, e.g. 6,5,5,1 ('-' for empty)")
        ->required();
    dc->add_option("--t", dc_t, "ribbon size t >= 2")->required();

    // zasym
    std::string za_lambda;
    int za_z = 0, za_t = 0, za_max = 0;
    bool za_enumerate = false;
    auto* za = app.add_subcommand("zasym", "z-asymmetric classification and witnesses");
    za->add_option("partition", za_lambda, "partition to test ('-' for empty)");
    za->add_option("--z", za_z, "asymmetry parameter")->required();
    za->add_option("--t", za_t, "also extract the structure witness for this t");
    za->add_flag("--enumerate", za_enumerate, "list all z-asymmetric partitions");
    za->add_option("--max-size", za_max, "bound for --enumerate");

    // factorize
    std::string fz_lambda, fz_family;
    int fz_t = 2, fz_z = 0;
    bool fz_have_z = false, fz_expand = false;
    auto* fz = app.add_subcommand("factorize",
                                  "factor phi_t of the Hamel-King function or a classical "
                                  "universal character");
    fz->add_option("partition", fz_lambda, "indexing partition")->required();
    fz->add_option("--t", fz_t, "ribbon size t >= 2")->required();
    auto* fz_zopt = fz->add_option("--z", fz_z, "Hamel-King parameter z");
    fz->add_option("--family", fz_family, "so+ | o | sp (classical specialization)");
    fz->add_flag("--expand", fz_expand, "also expand both sides and compare");

    // character
    std::string ch_lambda, ch_family;
    int ch_z = 0;
    bool ch_have_z = false;
    auto* ch = app.add_subcommand("character",
                                  "universal character or Hamel-King function, s-basis");
    ch->add_option("--lambda", ch_lambda, "indexing partition")->required();
    auto* ch_zopt = ch->add_option("--z", ch_z, "Hamel-King parameter (coefficients in q)");
    ch->add_option("--family", ch_family, "sp | o | so+ | so-");

    // sxp
    std::string sx_lambda, sx_tau = "-", sx_mu = "-", sx_rule = "schur";
    int sx_t = 2;
    auto* sx = app.add_subcommand("sxp", "plethysm expansion rules");
    sx->add_option("--lambda", sx_lambda, "outer partition")->required();
    sx->add_option("--t", sx_t, "plethysm parameter t >= 2")->required();
    sx->add_option("--rule", sx_rule, "schur | wildon | universal-so");
    sx->add_option("--tau", sx_tau, "tau for the wildon rule");
    sx->add_option("--mu", sx_mu, "inner shape for the wildon rule");

    // chi
    std::string chi_lambda, chi_mu, chi_inner = "-";
    auto* chs = app.add_subcommand("chi", "symmetric group character value");
    chs->add_option("--lambda", chi_lambda, "shape")->required();
    chs->add_option("--mu", chi_mu, "class type")->required();
    chs->add_option("--skew-inner", chi_inner, "inner shape for a skew character");

    // verify
    std::string vf_suite;
    std::string vf_t, vf_z;
    int vf_max = -1;
    bool vf_quick = false;
    auto* vf = app.add_subcommand("verify", "run a named invariant sweep");
    vf->add_option("suite", vf_suite,
                   "littlewood | zasym | schur-verschiebung | hamel-king | chiz | sxp | "
                   "characters | all")
        ->required();
    vf->add_option("--max-size", vf_max, "size bound override");
    vf->add_option("--t", vf_t, "comma list of t values, e.g. 2,3,4");
    vf->add_option("--z", vf_z, "range like -2..4 or comma list");
    vf->add_flag("--quick", vf_quick, "bounded smoke sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    set_degree_cap(max_degree);
    (void)json_flag;

    try {
        if (dc->parsed()) {
            if (dc_t < 2) {
                std::cerr << "error: --t must be at least 2\n";
                return 2;
            }
            out.emit(to_json(core_quotient(Partition::parse(dc_lambda), dc_t)));
            return 0;
        }

        if (za->parsed()) {
            if (za_enumerate) {
                Json arr = Json::array();
                for (const auto& p : enumerate_z_asymmetric(za_z, za_max))
                    arr.push_back(to_json(p));
                out.emit(arr);
                return 0;
            }
            Partition lam = Partition::parse(za_lambda);
            Json j;
            j["lambda"] = to_json(lam);
            j["z"] = za_z;
            j["is_z_asymmetric"] = is_z_asymmetric(lam, za_z);
            if (za_t >= 2) {
                auto w = zasym_witness(lam, za_z, za_t);
                j["witness"] = w ? to_json(*w) : Json(nullptr);
            }
            out.emit(j);
            return 0;
        }

        if (fz->parsed()) {
            if (fz_t < 2) {
                std::cerr << "error: --t must be at least 2\n";
                return 2;
            }
            fz_have_z = fz_zopt->count() > 0;
            if (fz_have_z == !fz_family.empty()) {
                std::cerr << "error: give exactly one of --z or --family\n";
                return 2;
            }
            Partition lam = Partition::parse(fz_lambda);
            FactorizationResult res;
            SymFunc direct(Basis::p);
            if (fz_have_z) {
                res = factor_verschiebung(lam, fz_z, fz_t);
                if (fz_expand)
                    direct = verschiebung(to_basis(hamel_king(lam, fz_z), Basis::p), fz_t);
            } else {
                CharFamily fam = family_from_name(fz_family);
                res = factor_classical(lam, fz_t, fam);
                if (fz_expand)
                    direct = verschiebung(to_basis(universal_char(fam, lam), Basis::p), fz_t);
            }
            Json j = to_json(res);
            if (fz_expand) {
                SymFunc rhs = expand_factorization(res);
                j["lhs"] = to_json(to_basis(direct, Basis::s));
                j["rhs"] = to_json(to_basis(rhs, Basis::s));
                j["equal"] = direct == rhs;
            }
            out.emit(j);
            return 0;
        }

        if (ch->parsed()) {
            ch_have_z = ch_zopt->count() > 0;
            if (ch_have_z == !ch_family.empty()) {
                std::cerr << "error: give exactly one of --z or --family\n";
                return 2;
            }
            Partition lam = Partition::parse(ch_lambda);
            SymFunc f = ch_have_z ? hamel_king(lam, ch_z)
                                  : universal_char(family_from_name(ch_family), lam);
            out.emit(to_json(f));
            return 0;
        }

        if (sx->parsed()) {
            if (sx_t < 2) {
                std::cerr << "error: --t must be at least 2\n";
                return 2;
            }
            Partition lam = Partition::parse(sx_lambda);
            Json terms = Json::array();
            if (sx_rule == "schur") {
                for (const auto& term : sxp_schur(lam, sx_t)) {
                    Json tj;
                    tj["nu"] = to_json(term.nu);
                    tj["sign"] = term.sign;
                    tj["coeff"] = term.coeff;
                    terms.push_back(tj);
                }
            } else if (sx_rule == "wildon") {
                SkewShape shape{lam, Partition::parse(sx_mu)};
                for (const auto& [nu, c] : sxp_wildon(Partition::parse(sx_tau), shape, sx_t)) {
                    Json tj;
                    tj["nu"] = to_json(nu);
                    tj["coeff"] = c;
                    terms.push_back(tj);
                }
            } else if (sx_rule == "universal-so") {
                for (int d = 0; d <= sx_t * lam.size(); d += sx_t) {
                    for (const auto& mu : partitions_of(d)) {
                        if (!t_core(mu, sx_t).empty())
                            continue;
                        long long b = b_coeff(lam, mu, sx_t);
                        if (b == 0)
                            continue;
                        Json tj;
                        tj["mu"] = to_json(mu);
                        tj["sign"] = sgn_t({mu, Partition()}, sx_t);
                        tj["b"] = b;
                        terms.push_back(tj);
                    }
                }
            } else {
                std::cerr << "error: unknown rule '" << sx_rule << "'\n";
                return 2;
            }
            out.emit(terms);
            return 0;
        }

        if (chs->parsed()) {
            Partition lam = Partition::parse(chi_lambda);
            Partition mu = Partition::parse(chi_mu);
            Partition inner = Partition::parse(chi_inner);
            long long v = inner.empty() ? chi(lam, mu) : chi_skew({lam, inner}, mu);
            out.emit(Json(v));
            return 0;
        }

        if (vf->parsed()) {
            VerifyOptions opt;
            opt.max_size = vf_max;
            opt.quick = vf_quick;
            if (!vf_t.empty())
                opt.ts = parse_int_list(vf_t);
            if (!vf_z.empty())
                opt.zs = parse_range_or_list(vf_z);
            std::vector<VerifyReport> reports;
            if (vf_suite == "all")
                reports = run_all_suites(opt);
            else
                reports.push_back(run_suite(vf_suite, opt));
            Json arr = Json::array();
            bool ok = true;
            for (const auto& r : reports) {
                arr.push_back(report_to_json(r));
                ok = ok && r.ok();
            }
            out.emit(vf_suite == "all" ? arr : arr[0]);
            return ok ? 0 : 1;
        }
    } catch (const DegreeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
