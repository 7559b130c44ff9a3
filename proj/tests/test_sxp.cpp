#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charfact/degree_guard.hpp"
#include "charfact/sxp.hpp"

using namespace charfact;

TEST_CASE("character values")
{
    // Trivial and sign characters.
    for (const auto& mu : partitions_of(5)) {
        CHECK(chi(Partition{5}, mu) == 1);
        int sign = (5 - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(chi(Partition{1, 1, 1, 1, 1}, mu) == sign);
    }
    CHECK(chi(Partition{1, 1}, Partition{2}) == -1);
    CHECK(chi(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK_THROWS_AS(chi(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("character tables are orthogonal")
{
    for (int n = 1; n <= 7; ++n) {
        CharValueTable t = CharValueTable::build(n);
        CHECK(t.column_orthogonal());
        CHECK(t.row_orthogonal());
    }
}

TEST_CASE("skew characters")
{
    for (const auto& mu : partitions_of(4))
        CHECK(chi_skew({Partition{3, 1}, Partition()}, mu) == chi(Partition{3, 1}, mu));
    // chi^{(2,1)/(1)}((2)) = chi^{(2)}((2)) + chi^{(1,1)}((2)) = 0
    CHECK(chi_skew({Partition{2, 1}, Partition{1}}, Partition{2}) == 0);
    CHECK_THROWS_AS(chi_skew({Partition{2, 1}, Partition{1}}, Partition{3}),
                    std::invalid_argument);
    // ch(chi^{lambda/mu}) = s_{lambda/mu}: values match the p-expansion.
    for (const auto& lam : partitions_up_to(6)) {
        for (const auto& mu : subpartitions(lam)) {
            SymFunc f = skew_schur_p({lam, mu});
            for (const auto& rho : partitions_of(lam.size() - mu.size())) {
                QPoly c = f.coeff(rho);
                CHECK(c == QPoly(Rat(int_from(chi_skew({lam, mu}, rho))) / Rat(z_factor(rho))));
            }
        }
    }
}

TEST_CASE("littlewood multiplication rule")
{
    CHECK(littlewood_mult_check(Partition{2, 2}, Partition{1, 1}, 2));
    CHECK(littlewood_mult_check(Partition{2}, Partition{1}, 2));
    // chi^{(2,2)}((2,2)) = 2: both sides explicitly.
    CHECK(chi(Partition{2, 2}, Partition{2, 2}) == 2);
    for (int t : {2, 3}) {
        for (int m = 1; t * m <= 8; ++m)
            for (const auto& mu : partitions_of(m))
                for (const auto& lam : partitions_of(t * m))
                    CHECK(littlewood_mult_check(lam, mu, t));
    }
    // Vanishing branch: nonempty t-core.
    CHECK(chi(Partition{3, 1}, Partition{2, 2}) == 0);
}

TEST_CASE("farahat skew rule")
{
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(6)) {
            for (const auto& mu : subpartitions(lam)) {
                int d = lam.size() - mu.size();
                if (d == 0 || d % t != 0)
                    continue;
                for (const auto& rho : partitions_of(d / t))
                    CHECK(farahat_check({lam, mu}, rho, t));
            }
        }
    }
}

TEST_CASE("SXP rule for Schur functions")
{
    // lambda=(1), t=2: p_2 = s_2 - s_11.
    auto terms = sxp_schur(Partition{1}, 2);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == SXPTerm{Partition{1, 1}, -1, 1});
    CHECK(terms[1] == SXPTerm{Partition{2}, 1, 1});
    // lambda=(1), t=3.
    auto t3 = sxp_schur(Partition{1}, 3);
    REQUIRE(t3.size() == 3);
    CHECK(t3[0] == SXPTerm{Partition{1, 1, 1}, 1, 1});
    CHECK(t3[1] == SXPTerm{Partition{2, 1}, -1, 1});
    CHECK(t3[2] == SXPTerm{Partition{3}, 1, 1});
    // Expansion matches the p-basis oracle.
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(4)) {
            SymFunc expansion(Basis::p);
            for (const auto& term : sxp_schur(lam, t))
                expansion += to_basis(generator(Basis::s, term.nu), Basis::p)
                                 .scaled(QPoly(rat_from(term.sign * term.coeff)));
            CHECK(expansion == plethysm_pt(generator(Basis::s, lam), t));
        }
    }
}

TEST_CASE("Wildon's rule")
{
    // tau = mu = empty reduces to the SXP rule.
    for (const auto& lam : partitions_up_to(3)) {
        auto wild = sxp_wildon(Partition(), {lam, Partition()}, 2);
        std::map<Partition, long long> plain;
        for (const auto& term : sxp_schur(lam, 2))
            plain[term.nu] = term.sign * term.coeff;
        CHECK(wild == plain);
    }
    // tau=(1), shape (1)/-: s_1 * p_2 in the Schur basis.
    auto w = sxp_wildon(Partition{1}, {Partition{1}, Partition()}, 2);
    SymFunc oracle = mul(generator(Basis::p, Partition{2}),
                         to_basis(generator(Basis::s, Partition{1}), Basis::p));
    SymFunc expansion(Basis::p);
    for (const auto& [nu, c] : w)
        expansion += to_basis(generator(Basis::s, nu), Basis::p).scaled(QPoly(rat_from(c)));
    CHECK(expansion == oracle);
    // Nonempty tau and inner shape against the oracle.
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(4)) {
            for (const auto& mu : subpartitions(lam)) {
                for (const auto& tau : partitions_up_to(2)) {
                    auto terms = sxp_wildon(tau, {lam, mu}, t);
                    SymFunc acc(Basis::p);
                    for (const auto& [nu, c] : terms)
                        acc += to_basis(generator(Basis::s, nu), Basis::p)
                                   .scaled(QPoly(rat_from(c)));
                    SymFunc want = mul(to_basis(generator(Basis::s, tau), Basis::p),
                                       plethysm_pt(skew_schur_p({lam, mu}), t));
                    CHECK(acc == want);
                }
            }
        }
    }
}

TEST_CASE("a coefficients: two routes, duality, o = so+")
{
    CHECK(a_coeff(Partition(), Partition(), CharFamily::so_plus, 2) == 1);
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(3)) {
            auto ao = a_coeff_table(lam, CharFamily::o, t);
            auto aso = a_coeff_table(lam, CharFamily::so_plus, t);
            auto lem_o = a_coeff_lemma_table(lam, CharFamily::o, t);
            for (auto it = ao.begin(); it != ao.end();)
                it = it->second == 0 ? ao.erase(it) : std::next(it);
            for (auto it = aso.begin(); it != aso.end();)
                it = it->second == 0 ? aso.erase(it) : std::next(it);
            CHECK(ao == lem_o);
            CHECK(ao == aso);
            // Duality against the conjugated symplectic table.
            auto asp = a_coeff_table(lam.conjugate(), CharFamily::sp, t);
            long long sgn = (lam.size() * (t - 1)) % 2 == 0 ? 1 : -1;
            for (const auto& [nu, c] : ao) {
                auto it = asp.find(nu.conjugate());
                CHECK(c == sgn * (it == asp.end() ? 0 : it->second));
            }
        }
    }
}

TEST_CASE("b coefficients and the universal SXP rule")
{
    CHECK(b_coeff(Partition(), Partition(), 2) == 1);
    CHECK(b_coeff(Partition{1}, Partition{1}, 2) == 0);  // nonempty 2-core
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(2)) {
            CHECK(universal_sxp_check(lam, t));
            auto a = a_coeff_table(lam, CharFamily::so_plus, t);
            for (int d = 0; d <= t * lam.size(); d += t) {
                for (const auto& mu : partitions_of(d)) {
                    if (!t_core(mu, t).empty())
                        continue;
                    long long b = b_coeff(lam, mu, t);
                    long long lhs = b == 0 ? 0 : sgn_t({mu, Partition()}, t) * b;
                    auto it = a.find(mu);
                    CHECK(lhs == (it == a.end() ? 0 : it->second));
                }
            }
        }
    }
}

TEST_CASE("Levi weight construction")
{
    ConstructionSO c = construction_so(Partition{15, 14, 10, 7, 4, 3, 2, 1}, 8, 5);
    CHECK(c.gammas == std::vector<std::vector<int>>{{0, -1, -1}, {0, 0, -1}, {3, 1}});
    CHECK(c.gl_sizes == std::vector<int>{3, 3});
    CHECK(c.so_size == 5);
    CHECK(c.group_descriptor() == "GL3 x GL3 x SO5");

    // b = 0: the quotient is paired as in the so-factorization.
    Partition lam{4, 2, 2, 1, 1};  // 10 cells
    ConstructionSO b0 = construction_so(lam, 6, 3);
    CoreQuotient cq = core_quotient(lam, 3);
    // Pair (t-r-1, r) with shift c_r and window 2a.
    REQUIRE(b0.gammas.size() == 2);
    CHECK(b0.gl_sizes == std::vector<int>{4});
    CHECK(b0.so_size == 5);

    ConstructionSO empty = construction_so(Partition(), 4, 2);
    for (const auto& g : empty.gammas)
        for (int x : g)
            CHECK(x == 0);
    CHECK_THROWS_AS(construction_so(Partition{1, 1, 1}, 2, 2), std::invalid_argument);
}

TEST_CASE("quotient sizes in the construction example")
{
    // The worked example's decomposition data.
    Partition lam{15, 14, 10, 7, 4, 3, 2, 1};
    CoreQuotient cq = core_quotient(lam, 5);
    CHECK(cq.kappa == std::vector<int>{0, -1, 1, 0, 0});
    CHECK(cq.quotient == std::vector<Partition>{{}, {}, {2, 2, 1}, {1}, {3, 1}});
}
