#include "charfact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "charfact/characters.hpp"
#include "charfact/degree_guard.hpp"
#include "charfact/littlewood.hpp"
#include "charfact/partition.hpp"
#include "charfact/qpoly.hpp"
#include "charfact/symfunc.hpp"
#include "charfact/sxp.hpp"
#include "charfact/univchar.hpp"

namespace charfact {

namespace {

class Sweep {
public:
    explicit Sweep(std::string name) : start_(std::chrono::steady_clock::now())
    {
        report_.suite = std::move(name);
    }

    void check(const std::string& instance, bool ok, const std::string& expected = "true",
               const std::string& actual_on_fail = "false")
    {
        ++report_.instances;
        if (!ok)
            report_.failures.push_back({instance, expected, actual_on_fail});
    }

    template <typename T>
    void check_eq(const std::string& instance, const T& expected, const T& actual,
                  const std::string& expected_str, const std::string& actual_str)
    {
        ++report_.instances;
        if (!(expected == actual))
            report_.failures.push_back({instance, expected_str, actual_str});
    }

    VerifyReport finish()
    {
        auto end = std::chrono::steady_clock::now();
        report_.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start_).count();
        return report_;
    }

private:
    VerifyReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> ts_or(const VerifyOptions& opt, std::vector<int> dflt)
{
    return opt.ts.empty() ? dflt : opt.ts;
}

std::vector<int> zs_or(const VerifyOptions& opt, std::vector<int> dflt)
{
    return opt.zs.empty() ? dflt : opt.zs;
}

int size_or(const VerifyOptions& opt, int dflt)
{
    return opt.max_size > 0 ? opt.max_size : dflt;
}

std::string infix(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += " ";
        out += p;
    }
    return out;
}

// Merge reports from criterion-sized sweeps into one suite report.
VerifyReport merge_reports(const std::string& name, std::initializer_list<VerifyReport> parts)
{
    VerifyReport out;
    out.suite = name;
    for (const auto& r : parts) {
        out.instances += r.instances;
        out.millis += r.millis;
        out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Suite 1+2: Littlewood decomposition, signs.

VerifyReport verify_littlewood_core(const VerifyOptions& opt)
{
    Sweep sweep("littlewood-core");
    int max_rt = size_or(opt, opt.quick ? 8 : 16);
    auto ts = ts_or(opt, {2, 3, 4, 5});

    // Pinned instances.
    {
        CoreQuotient cq = core_quotient(Partition{6, 5, 5, 1}, 3);
        bool ok = cq.core == Partition{1, 1} &&
                  cq.quotient == std::vector<Partition>{{1}, {}, {2, 2}} &&
                  cq.kappa == std::vector<int>{1, -1, 0};
        sweep.check("decompose 6,5,5,1 t=3", ok);
        sweep.check("inverse 6,5,5,1 t=3",
                    from_core_quotient(Partition{1, 1}, {{1}, {}, {2, 2}}, 3) ==
                        Partition{6, 5, 5, 1});
    }
    {
        CoreQuotient cq = core_quotient(Partition{8, 4, 3, 3, 3, 1, 1}, 3);
        bool ok = cq.kappa == std::vector<int>{0, 1, -1} && cq.core == Partition{2} &&
                  cq.quotient == std::vector<Partition>{{1}, {2}, {2, 2}};
        sweep.check("decompose 8,4,3,3,3,1,1 t=3", ok);
        sweep.check("size identity 8,4,3,3,3,1,1",
                    23 == cq.core.size() + 3 * cq.quotient_size());
    }
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(max_rt)) {
            std::string inst = infix({"roundtrip", lam.to_string(), "t=" + std::to_string(t)});
            CoreQuotient cq = core_quotient(lam, t);
            bool ok = from_core_quotient(cq.core, cq.quotient, t) == lam;
            ok = ok && lam.size() == cq.core.size() + t * cq.quotient_size();
            ok = ok && is_t_core(cq.core, t);
            int ksum = 0;
            for (int c : cq.kappa)
                ksum += c;
            ok = ok && ksum == 0;
            ok = ok && core_from_kappa(cq.kappa, t) == cq.core;
            ok = ok && cq.core.size() == core_size_from_kappa(cq.kappa, t);
            // Window independence.
            ok = ok && core_quotient(lam, t, 1) == cq && core_quotient(lam, t, t) == cq;
            // Conjugation law.
            CoreQuotient cj = core_quotient(lam.conjugate(), t);
            for (int r = 0; r < t; ++r) {
                ok = ok && cj.quotient[r] == cq.quotient[t - r - 1].conjugate();
                ok = ok && cj.kappa[r] == -cq.kappa[t - r - 1];
            }
            ok = ok && rank_decomposition_check(lam, t);
            sweep.check(inst, ok);
        }
    }

    return sweep.finish();
}

VerifyReport verify_littlewood_signs(const VerifyOptions& opt)
{
    Sweep sweep("littlewood-signs");
    int max_sgn = size_or(opt, opt.quick ? 6 : 12);
    auto ts = ts_or(opt, {2, 3, 4});

    {
        auto [word, sign] = sigma_perm(Partition{6, 5, 5, 1}, 3, 6);
        sweep.check("sigma_3(6,5,5,1;6) = 246513 sign +1",
                    word == std::vector<int>{2, 4, 6, 5, 1, 3} && sign == 1);
    }

    // Sign coherence over tileable pairs: bead moves, permutation product,
    // and two geometric peel orders.
    for (int t : ts) {
        if (t > 4)
            continue;
        for (const auto& lam : partitions_up_to(max_sgn)) {
            for (const auto& mu : subpartitions(lam)) {
                if ((lam.size() - mu.size()) % t != 0)
                    continue;
                if (!is_t_tileable({lam, mu}, t))
                    continue;
                std::string inst = infix({"sgn", lam.to_string(), "/", mu.to_string(),
                                          "t=" + std::to_string(t)});
                int bead = sgn_t({lam, mu}, t);
                int n = std::max(lam.length(), mu.length());
                int perm = sigma_sign(lam, t, n) * sigma_sign(mu, t, n);
                auto peel0 = sgn_via_peeling({lam, mu}, t, 0);
                auto peel1 = sgn_via_peeling({lam, mu}, t, 1);
                bool ok = peel0 && peel1 && bead == perm && bead == *peel0 && bead == *peel1;
                // Window independence of the permutation product.
                ok = ok && bead == sigma_sign(lam, t, n + 1) * sigma_sign(mu, t, n + 1);
                sweep.check(inst, ok);
            }
        }
        // sgn_2(lambda) = (-1)^{odd(lambda)/2} for empty 2-core.
        if (t == 2) {
            for (const auto& lam : partitions_up_to(max_sgn)) {
                if (!t_core(lam, 2).empty())
                    continue;
                int odd = 0;
                for (int part : lam.parts())
                    if (part % 2 != 0)
                        ++odd;
                int expect = (odd / 2) % 2 == 0 ? 1 : -1;
                sweep.check(infix({"sgn2 formula", lam.to_string()}),
                            sgn_t({lam, Partition()}, 2) == expect);
            }
        }
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 3: z-asymmetric structure.

VerifyReport verify_zasym(const VerifyOptions& opt)
{
    Sweep sweep("zasym");
    int max_size = size_or(opt, opt.quick ? 12 : 24);
    int gf_order = opt.quick ? 16 : 30;
    auto ts = ts_or(opt, {2, 3, 4, 5});
    auto zs = zs_or(opt, {0, 1, 2, 3, 4, 5});

    // Generating function: counts by size match (-q^{1+|z|}; q^2)_infinity.
    for (int z : zs) {
        std::vector<long long> counts(gf_order + 1, 0);
        for (const auto& lam : enumerate_z_asymmetric(z, gf_order))
            ++counts[lam.size()];
        std::vector<long long> product(gf_order + 1, 0);
        product[0] = 1;
        for (int j = 0; 1 + std::abs(z) + 2 * j <= gf_order; ++j) {
            int e = 1 + std::abs(z) + 2 * j;
            for (int d = gf_order; d >= e; --d)
                product[d] += product[d - e];
        }
        bool ok = counts == product;
        sweep.check(infix({"generating function z=" + std::to_string(z)}), ok);
    }

    // Witness soundness and reconstruction.
    for (int z : zs) {
        auto zasyms = enumerate_z_asymmetric(z, max_size);
        for (int t : ts) {
            for (const auto& lam : zasyms) {
                std::string inst = infix({"witness", lam.to_string(),
                                          "z=" + std::to_string(z), "t=" + std::to_string(t)});
                auto w = zasym_witness(lam, z, t);
                bool ok = w.has_value();
                if (ok)
                    ok = reconstruct_from_witness(*w) == lam;
                sweep.check(inst, ok);
            }
        }
    }

    // Conjugation: z-asymmetric iff conjugate is (-z)-asymmetric; witness for
    // negative z goes through the conjugate.
    for (int z : zs) {
        for (const auto& lam : enumerate_z_asymmetric(z, std::min(max_size, 16))) {
            sweep.check(infix({"conjugate", lam.to_string(), "z=" + std::to_string(z)}),
                        is_z_asymmetric(lam.conjugate(), -z));
            auto w = zasym_witness(lam.conjugate(), -z, 3);
            sweep.check(infix({"witness conj", lam.to_string(), "z=" + std::to_string(-z)}),
                        w && reconstruct_from_witness(*w) == lam.conjugate());
        }
    }

    // A t-core is z-asymmetric iff 0 <= z <= t-2 and c_r = 0 for r < z.
    int core_bound = opt.quick ? 12 : 20;
    for (int t : ts) {
        for (const auto& mu : partitions_up_to(core_bound)) {
            if (!is_t_core(mu, t))
                continue;
            auto kappa = core_quotient(mu, t).kappa;
            for (int z : zs) {
                bool expect = z <= t - 2;
                for (int r = 0; r < z && expect; ++r)
                    if (kappa[r] != 0)
                        expect = false;
                if (expect)
                    expect = kappa_in_C(kappa, z % t, t);
                sweep.check(infix({"core zasym", mu.to_string(), "z=" + std::to_string(z),
                                   "t=" + std::to_string(t)}),
                            is_z_asymmetric(mu, z) == expect);
            }
        }
    }

    // Minimality of the constructed z-asymmetric partition with given kappa.
    for (int t : ts) {
        if (t > 4)
            continue;
        for (int z = 0; z <= std::min(3, t - 1); ++z) {
            std::map<std::vector<int>, Partition> first_by_kappa;
            for (const auto& lam : enumerate_z_asymmetric(z, std::min(max_size, 18))) {
                auto kappa = core_quotient(lam, t).kappa;
                if (!first_by_kappa.count(kappa))
                    first_by_kappa[kappa] = lam;  // enumeration is size-ordered
            }
            for (const auto& [kappa, lam] : first_by_kappa) {
                std::ostringstream os;
                os << "minimal z=" << z << " t=" << t << " kappa=";
                for (int c : kappa)
                    os << c << ",";
                sweep.check(os.str(), minimal_z_asym(kappa, z, t) == lam);
            }
        }
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 4: Verschiebung on skew Schur functions.

VerifyReport verify_schur_verschiebung(const VerifyOptions& opt)
{
    Sweep sweep("schur-verschiebung");
    int max_size = size_or(opt, opt.quick ? 6 : 10);
    auto ts = ts_or(opt, {2, 3, 4});

    for (int t : ts) {
        for (const auto& lam : partitions_up_to(max_size)) {
            for (const auto& mu : subpartitions(lam)) {
                if ((lam.size() - mu.size()) % t != 0)
                    continue;
                SkewShape shape{lam, mu};
                SymFunc direct = verschiebung_skew_direct(shape, t);
                SymFunc factored = verschiebung_schur(shape, t);
                sweep.check(infix({"phi", lam.to_string(), "/", mu.to_string(),
                                   "t=" + std::to_string(t)}),
                            direct == factored, "equal expansions", "mismatch");
            }
        }
    }

    // The shortcut above must agree with the full pipeline on small shapes.
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(std::min(max_size, 6))) {
            for (const auto& mu : subpartitions(lam)) {
                SkewShape shape{lam, mu};
                SymFunc full = verschiebung(skew_schur_p(shape), t);
                sweep.check(infix({"pipeline", lam.to_string(), "/", mu.to_string(),
                                   "t=" + std::to_string(t)}),
                            full == verschiebung_skew_direct(shape, t));
            }
        }
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 5+6: Hamel-King identity; modified determinant.

VerifyReport verify_hk_identity(const VerifyOptions& opt)
{
    Sweep sweep("hamel-king-identity");
    int max_size = size_or(opt, opt.quick ? 6 : 9);
    auto zs = zs_or(opt, {-3, -2, -1, 0, 1, 2, 3});

    // Determinant = skew sum, symbolically in q; omega-duality.
    for (const auto& lam : partitions_up_to(max_size)) {
        for (int z : zs) {
            SymFunc skew = hamel_king(lam, z);
            SymFunc det = hamel_king_det(lam, z, lam.length());
            SymFunc det2 = hamel_king_det(lam, z, lam.length() + 1);
            bool ok = to_basis(det, Basis::p) == to_basis(skew, Basis::p) && det == det2;
            sweep.check(infix({"hk", lam.to_string(), "z=" + std::to_string(z)}), ok);
            if (lam.size() <= std::min(max_size, 8)) {
                SymFunc lhs = omega(skew);
                SymFunc rhs = hamel_king(lam.conjugate(), -z);
                // q -> (-1)^z q
                if (z % 2 != 0) {
                    SymFunc twisted(Basis::s);
                    for (const auto& [part, coef] : rhs.terms())
                        twisted.add_term(part, coef.scale_variable(Rat(-1)));
                    rhs = twisted;
                }
                sweep.check(infix({"hk omega", lam.to_string(), "z=" + std::to_string(z)}),
                            lhs == rhs);
            }
        }
        // Specializations recover the classical universal characters.
        SymFunc sp_spec = hamel_king(lam, -1).eval_q(Rat(1));
        SymFunc o_spec = hamel_king(lam, 1).eval_q(Rat(-1));
        SymFunc sop_spec = hamel_king(lam, 0).eval_q(Rat(1));
        SymFunc som_spec = hamel_king(lam, 0).eval_q(Rat(-1));
        bool ok = sp_spec == universal_char(CharFamily::sp, lam) &&
                  o_spec == universal_char(CharFamily::o, lam) &&
                  sop_spec == universal_char(CharFamily::so_plus, lam) &&
                  som_spec == universal_char(CharFamily::so_minus, lam);
        sweep.check(infix({"hk specializations", lam.to_string()}), ok);
    }

    // Universal characters: skew sum vs both determinants; omega swaps o/sp.
    for (const auto& lam : partitions_up_to(std::min(max_size, 8))) {
        for (CharFamily fam : {CharFamily::sp, CharFamily::o, CharFamily::so_plus,
                               CharFamily::so_minus}) {
            SymFunc sum = universal_char(fam, lam);
            SymFunc dh = universal_char_det_h(fam, lam, lam.length());
            SymFunc de = universal_char_det_e(fam, lam, lam.part(0));
            bool ok = to_basis(dh, Basis::p) == to_basis(sum, Basis::p) &&
                      to_basis(de, Basis::p) == to_basis(sum, Basis::p);
            sweep.check(infix({"uc dets", family_name(fam), lam.to_string()}), ok);
        }
        bool omega_ok =
            omega(universal_char(CharFamily::o, lam)) ==
                universal_char(CharFamily::sp, lam.conjugate()) &&
            omega(universal_char(CharFamily::so_plus, lam)) ==
                universal_char(CharFamily::so_plus, lam.conjugate());
        sweep.check(infix({"uc omega", lam.to_string()}), omega_ok);
        // Character interrelation: re-expansion recovers s_lambda.
        if (lam.size() <= 6) {
            for (CharFamily fam : {CharFamily::sp, CharFamily::o, CharFamily::so_plus}) {
                SymFunc acc(Basis::p);
                for (const auto& [mu, c] : schur_in_universal(lam, fam))
                    acc += to_basis(universal_char(fam, mu), Basis::p).scaled(QPoly(rat_from(c)));
                sweep.check(infix({"interrelation", family_name(fam), lam.to_string()}),
                            acc == to_basis(generator(Basis::s, lam), Basis::p));
            }
        }
        // Constant term of so+_lambda.
        QPoly c0 = universal_char(CharFamily::so_plus, lam).coeff(Partition());
        QPoly want;
        if (is_z_asymmetric(lam, 0)) {
            int num = lam.size() - lam.frobenius_rank();
            want = QPoly(Rat((num / 2) % 2 == 0 ? 1 : -1));
        }
        sweep.check(infix({"so+ constant term", lam.to_string()}), c0 == want);
    }

    return sweep.finish();
}

VerifyReport verify_rs2(const VerifyOptions& opt)
{
    Sweep sweep("rs2");
    // Modified determinant vs skew expansion, symbolic in (u, v).
    int rs_size = size_or(opt, opt.quick ? 3 : 6);
    QPoly u = QPoly::q();
    QPoly v = QPoly::monomial(Rat(1), 2);  // keep u and v distinguishable
    for (const auto& lam : partitions_up_to(rs_size)) {
        for (const auto& mu : partitions_up_to(rs_size)) {
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    for (int c = 0; c <= 2; ++c) {
                        SymFunc2 exp = rs2(lam, mu, a, b, c, u, v);
                        SymFunc2 det = rs2_det(lam, mu, a, b, c, u, v, lam.length(),
                                               mu.length());
                        std::ostringstream os;
                        os << "rs2 " << lam.to_string() << "|" << mu.to_string() << " a=" << a
                           << " b=" << b << " c=" << c;
                        sweep.check(os.str(), exp == det);
                        if (lam.size() <= 4 && mu.size() <= 4) {
                            SymFunc2 det2 = rs2_det(lam, mu, a, b, c, u, v, lam.length() + 1,
                                                    mu.length() + 1);
                            sweep.check(os.str() + " windows", det == det2);
                        }
                    }
                }
            }
        }
    }

    // Pinned 6x6 instance: (3,2), (4,2,1,1), a=-1, b=2, c=0; nu=(1) excluded.
    {
        Partition lam{3, 2}, mu{4, 2, 1, 1};
        SymFunc2 det = rs2_det(lam, mu, -1, 2, 0, u, v, 2, 4);
        SymFunc2 exp = rs2(lam, mu, -1, 2, 0, u, v);
        sweep.check("rs2 pinned (3,2),(4,2,1,1),-1,2", det == exp);
        // nu = (1) fails the rank condition: rk((1)+((-1)^1)) = 0 != 1.
        Partition nu{1};
        auto shifted = nu.add_rectangle(-1, 0 + shifted_rank(nu, 0));
        bool excluded = !shifted || shifted_rank(*shifted, 0) != shifted_rank(nu, 0);
        sweep.check("rs2 pinned nu=(1) excluded", excluded);
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 7+8: the master factorization and its classical specializations.

VerifyReport verify_chiz_master(const VerifyOptions& opt)
{
    Sweep sweep("chiz-master");
    int max_size = size_or(opt, opt.quick ? 6 : 9);
    auto ts = ts_or(opt, {2, 3, 4});
    auto zs = zs_or(opt, {-2, -1, 0, 1, 2, 3, 4, 5});

    for (const auto& lam : partitions_up_to(max_size)) {
        for (int t : ts) {
            for (int z : zs) {
                std::string inst = infix({"chiz", lam.to_string(), "t=" + std::to_string(t),
                                          "z=" + std::to_string(z)});
                SymFunc direct = verschiebung_hamel_king_direct(lam, z, t);
                FactorizationResult res = factor_verschiebung(lam, z, t);
                if (res.vanishes) {
                    sweep.check(inst + " vanishing", direct.is_zero());
                    continue;
                }
                SymFunc expanded = expand_factorization(res);
                bool ok = expanded == direct;
                // epsilon closed form is part of the construction; check that
                // the prefactor is a signed monomial q^{rk(core)}.
                int rk = t_core(lam, t).frobenius_rank();
                QPoly eps = res.epsilon;
                ok = ok && eps.is_monomial() && eps.degree() == rk &&
                     (eps.coeff(rk) == 1 || eps.coeff(rk) == -1);
                sweep.check(inst, ok);
            }
        }
    }

    return sweep.finish();
}

VerifyReport verify_chiz_classical(const VerifyOptions& opt)
{
    Sweep sweep("chiz-classical");
    int max_size = size_or(opt, opt.quick ? 6 : 9);
    auto ts = ts_or(opt, {2, 3, 4});

    // Classical factorizations against direct phi_t of the universal
    // characters, and coherence with the (z, q) specialization.
    for (const auto& lam : partitions_up_to(max_size)) {
        for (int t : ts) {
            for (CharFamily fam : {CharFamily::so_plus, CharFamily::o, CharFamily::sp}) {
                std::string inst = infix({"classical", family_name(fam), lam.to_string(),
                                          "t=" + std::to_string(t)});
                FactorizationResult res = factor_classical(lam, t, fam);
                SymFunc direct =
                    verschiebung(to_basis(universal_char(fam, lam), Basis::p), t);
                if (res.vanishes) {
                    sweep.check(inst + " vanishing", direct.is_zero());
                    continue;
                }
                sweep.check(inst, expand_factorization(res) == direct);

                int z = fam == CharFamily::so_plus ? 0 : fam == CharFamily::o ? 1 : -1;
                Rat qv = fam == CharFamily::o ? Rat(-1) : Rat(1);
                FactorizationResult gen = factor_verschiebung(lam, z, t);
                bool coherent = !gen.vanishes &&
                                expand_factorization(gen).eval_q(qv) ==
                                    expand_factorization(res);
                sweep.check(inst + " coherence", coherent);
            }
        }
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 9: symmetric group characters.

VerifyReport verify_characters(const VerifyOptions& opt)
{
    Sweep sweep("characters");
    int max_n = size_or(opt, opt.quick ? 7 : 10);
    auto ts = ts_or(opt, {2, 3});

    sweep.check("chi^{(2,2)}((2,2)) = 2", chi(Partition{2, 2}, Partition{2, 2}) == 2);

    for (int n = 1; n <= max_n; ++n) {
        CharValueTable table = CharValueTable::build(n);
        sweep.check("column orthogonality n=" + std::to_string(n), table.column_orthogonal());
        sweep.check("row orthogonality n=" + std::to_string(n), table.row_orthogonal());
    }

    // ch isomorphism: p-expansion coefficients of s_lambda are chi/z.
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        for (const auto& lam : partitions_of(n)) {
            SymFunc sp = to_basis(generator(Basis::s, lam), Basis::p);
            bool ok = true;
            for (const auto& mu : partitions_of(n))
                if (sp.coeff(mu) != QPoly(Rat(int_from(chi(lam, mu))) / Rat(z_factor(mu))))
                    ok = false;
            sweep.check(infix({"ch iso", lam.to_string()}), ok);
        }
    }

    for (int t : ts) {
        for (int m = 1; t * m <= max_n; ++m) {
            for (const auto& mu : partitions_of(m)) {
                for (const auto& lam : partitions_of(t * m)) {
                    sweep.check(infix({"littlewood-mult", lam.to_string(), mu.to_string(),
                                       "t=" + std::to_string(t)}),
                                littlewood_mult_check(lam, mu, t));
                }
            }
        }
    }

    // Farahat's skew theorem through the characteristic map.
    int farahat_max = std::min(max_n, opt.quick ? 6 : 8);
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(farahat_max)) {
            for (const auto& mu : subpartitions(lam)) {
                int diff = lam.size() - mu.size();
                if (diff == 0 || diff % t != 0)
                    continue;
                for (const auto& rho : partitions_of(diff / t)) {
                    sweep.check(infix({"farahat", lam.to_string(), "/", mu.to_string(),
                                       rho.to_string(), "t=" + std::to_string(t)}),
                                farahat_check({lam, mu}, rho, t));
                }
            }
        }
    }
    return sweep.finish();
}

// ---------------------------------------------------------------------------
// Suite 10: SXP rules and universal-character plethysm coefficients.

VerifyReport verify_sxp(const VerifyOptions& opt)
{
    Sweep sweep("sxp");
    ScopedDegreeCap cap(16);
    int max_size = size_or(opt, opt.quick ? 3 : 5);
    auto ts = ts_or(opt, {2, 3});

    for (int t : ts) {
        for (const auto& lam : partitions_up_to(max_size)) {
            std::string inst = infix({"sxp-schur", lam.to_string(), "t=" + std::to_string(t)});
            SymFunc expansion(Basis::p);
            for (const auto& term : sxp_schur(lam, t))
                expansion += to_basis(generator(Basis::s, term.nu), Basis::p)
                                 .scaled(QPoly(rat_from(term.sign * term.coeff)));
            SymFunc oracle = plethysm_pt(generator(Basis::s, lam), t);
            sweep.check(inst, expansion == oracle);
        }
    }

    // Wildon's rule with nonempty tau and inner shape.
    int wildon_max = opt.quick ? 3 : 5;
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(wildon_max)) {
            for (const auto& mu : subpartitions(lam)) {
                if (mu.empty() && !lam.empty())
                    continue;
                for (const auto& tau : partitions_up_to(2)) {
                    SkewShape shape{lam, mu};
                    auto terms = sxp_wildon(tau, shape, t);
                    SymFunc expansion(Basis::p);
                    for (const auto& [nu, c] : terms)
                        expansion +=
                            to_basis(generator(Basis::s, nu), Basis::p).scaled(QPoly(rat_from(c)));
                    SymFunc oracle = mul(to_basis(generator(Basis::s, tau), Basis::p),
                                         plethysm_pt(skew_schur_p(shape), t));
                    sweep.check(infix({"sxp-wildon", tau.to_string(), lam.to_string(), "/",
                                       mu.to_string(), "t=" + std::to_string(t)}),
                                expansion == oracle);
                }
            }
        }
    }

    // a-coefficients: both routes, duality, o = so+.
    int a_max = opt.quick ? 3 : 4;
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(a_max)) {
            std::map<CharFamily, std::map<Partition, long long>> two, one;
            bool ok = true;
            for (CharFamily fam : {CharFamily::o, CharFamily::sp, CharFamily::so_plus}) {
                two[fam] = a_coeff_table(lam, fam, t);
                one[fam] = a_coeff_lemma_table(lam, fam, t);
                for (auto it = two[fam].begin(); it != two[fam].end();)
                    it = it->second == 0 ? two[fam].erase(it) : std::next(it);
                if (two[fam] != one[fam])
                    ok = false;
            }
            sweep.check(infix({"a two-path", lam.to_string(), "t=" + std::to_string(t)}), ok);
            // Lecouvey equality a^o = a^{so+}.
            sweep.check(infix({"a o=so+", lam.to_string(), "t=" + std::to_string(t)}),
                        two[CharFamily::o] == two[CharFamily::so_plus]);
        }
        // Duality a^o_{lambda,nu} = (-1)^{|lambda|(t-1)} a^sp_{lambda',nu'}.
        for (const auto& lam : partitions_up_to(a_max)) {
            auto ao = a_coeff_table(lam, CharFamily::o, t);
            auto asp = a_coeff_table(lam.conjugate(), CharFamily::sp, t);
            long long sgn = (lam.size() * (t - 1)) % 2 == 0 ? 1 : -1;
            bool ok = true;
            for (const auto& [nu, c] : ao) {
                auto it = asp.find(nu.conjugate());
                long long other = it == asp.end() ? 0 : it->second;
                if (c != sgn * other)
                    ok = false;
            }
            for (const auto& [nu, c] : asp)
                if (c != 0 && !ao.count(nu.conjugate()))
                    ok = false;
            sweep.check(infix({"a duality", lam.to_string(), "t=" + std::to_string(t)}), ok);
        }
    }

    // b-coefficients and the universal SXP rule for so+.
    int b_max = opt.quick ? 2 : 3;
    for (int t : ts) {
        for (const auto& lam : partitions_up_to(b_max)) {
            sweep.check(infix({"universal sxp", lam.to_string(), "t=" + std::to_string(t)}),
                        universal_sxp_check(lam, t));
            // sgn_t(mu) b_{lambda,mu}(t) = a^{so+}_{lambda,mu}(t).
            auto a = a_coeff_table(lam, CharFamily::so_plus, t);
            bool ok = true;
            for (int d = 0; d <= t * lam.size(); d += t) {
                for (const auto& mu : partitions_of(d)) {
                    if (!t_core(mu, t).empty())
                        continue;
                    long long b = b_coeff(lam, mu, t);
                    long long lhs = b == 0 ? 0 : sgn_t({mu, Partition()}, t) * b;
                    auto it = a.find(mu);
                    if (lhs != (it == a.end() ? 0 : it->second))
                        ok = false;
                }
            }
            sweep.check(infix({"b vs a", lam.to_string(), "t=" + std::to_string(t)}), ok);
        }
    }

    // Pinned Levi weight construction.
    {
        ConstructionSO c = construction_so(Partition{15, 14, 10, 7, 4, 3, 2, 1}, 8, 5);
        bool ok = c.gammas ==
                      std::vector<std::vector<int>>{{0, -1, -1}, {0, 0, -1}, {3, 1}} &&
                  c.group_descriptor() == "GL3 x GL3 x SO5";
        sweep.check("construction_so worked example", ok);
        ConstructionSO e = construction_so(Partition(), 6, 3);
        bool zeros = true;
        for (const auto& g : e.gammas)
            for (int x : g)
                if (x != 0)
                    zeros = false;
        sweep.check("construction_so empty lambda", zeros);
    }
    return sweep.finish();
}

VerifyReport verify_littlewood(const VerifyOptions& opt)
{
    return merge_reports("littlewood",
                         {verify_littlewood_core(opt), verify_littlewood_signs(opt)});
}

VerifyReport verify_hamel_king(const VerifyOptions& opt)
{
    return merge_reports("hamel-king", {verify_hk_identity(opt), verify_rs2(opt)});
}

VerifyReport verify_chiz(const VerifyOptions& opt)
{
    return merge_reports("chiz", {verify_chiz_master(opt), verify_chiz_classical(opt)});
}

std::vector<std::string> verify_suite_names()
{
    return {"littlewood", "zasym", "schur-verschiebung", "hamel-king",
            "chiz",       "sxp",   "characters"};
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt)
{
    if (name == "littlewood")
        return verify_littlewood(opt);
    if (name == "zasym")
        return verify_zasym(opt);
    if (name == "schur-verschiebung")
        return verify_schur_verschiebung(opt);
    if (name == "hamel-king")
        return verify_hamel_king(opt);
    if (name == "chiz")
        return verify_chiz(opt);
    if (name == "sxp")
        return verify_sxp(opt);
    if (name == "characters")
        return verify_characters(opt);
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

std::vector<VerifyReport> run_all_suites(const VerifyOptions& opt)
{
    std::vector<VerifyReport> out;
    for (const auto& name : verify_suite_names())
        out.push_back(run_suite(name, opt));
    return out;
}

}  // namespace charfact
