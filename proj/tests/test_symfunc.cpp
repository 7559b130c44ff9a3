#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charfact/characters.hpp"
#include "charfact/degree_guard.hpp"
#include "charfact/littlewood.hpp"
#include "charfact/symfunc.hpp"

using namespace charfact;

namespace {

SymFunc s_gen(const Partition& p)
{
    return generator(Basis::s, p);
}

// Deterministic random element in the p-basis with constant coefficients.
SymFunc random_p(std::mt19937& rng, int max_deg, int terms)
{
    SymFunc f(Basis::p);
    auto parts = partitions_up_to(max_deg);
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int i = 0; i < terms; ++i)
        f.add_term(parts[pick(rng)], QPoly(Rat(coef(rng))));
    return f;
}

}  // namespace

TEST_CASE("generators and Jacobi-Trudi")
{
    // s_(2) = h_2, s_(1,1) = h_1^2 - h_2 = e_2
    CHECK(to_basis(s_gen({2}), Basis::h) == generator(Basis::h, Partition{2}));
    SymFunc s11_h = to_basis(s_gen({1, 1}), Basis::h);
    SymFunc expect(Basis::h);
    expect.add_term(Partition{1, 1}, QPoly::one());
    expect.add_term(Partition{2}, -QPoly::one());
    CHECK(s11_h == expect);
    CHECK(to_basis(s_gen({1, 1}), Basis::e) == generator(Basis::e, Partition{2}));
    // p_(2,2) = p_2 * p_2
    CHECK(mul(generator(Basis::p, Partition{2}), generator(Basis::p, Partition{2})) ==
          generator(Basis::p, Partition{2, 2}));
    // Jacobi-Trudi determinants agree with the character route.
    for (const auto& lam : partitions_up_to(8)) {
        SymFunc via_chi = to_basis(s_gen(lam), Basis::p);
        CHECK(to_basis(schur_jacobi_trudi_h({lam, Partition()}), Basis::p) == via_chi);
        CHECK(to_basis(schur_jacobi_trudi_e({lam, Partition()}), Basis::p) == via_chi);
    }
}

TEST_CASE("base conversions round trip")
{
    std::mt19937 rng(20240811);
    std::vector<Basis> bases{Basis::p, Basis::h, Basis::e, Basis::m, Basis::s};
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_p(rng, 8, 5);
        for (Basis b1 : bases) {
            SymFunc g = to_basis(f, b1);
            for (Basis b2 : bases)
                CHECK(to_basis(to_basis(g, b2), Basis::p) == f);
        }
    }
    // Classical pinned conversions.
    SymFunc p2_s = to_basis(generator(Basis::p, Partition{2}), Basis::s);
    CHECK(p2_s.coeff(Partition{2}) == QPoly::one());
    CHECK(p2_s.coeff(Partition{1, 1}) == -QPoly::one());
    SymFunc h2_p = to_basis(generator(Basis::h, Partition{2}), Basis::p);
    CHECK(h2_p.coeff(Partition{1, 1}) == QPoly(Rat(1, 2)));
    CHECK(h2_p.coeff(Partition{2}) == QPoly(Rat(1, 2)));
    // s_(2,2) in p via Murnaghan-Nakayama values.
    SymFunc s22_p = to_basis(s_gen({2, 2}), Basis::p);
    CHECK(s22_p.coeff(Partition{2, 2}) == QPoly(Rat(int_from(chi(Partition{2, 2}, Partition{2, 2}))) /
                                                Rat(z_factor(Partition{2, 2}))));
}

TEST_CASE("products")
{
    // Pieri: s_1 * s_1 = s_2 + s_11
    SymFunc prod = to_basis(mul(s_gen({1}), s_gen({1})), Basis::s);
    CHECK(prod.coeff(Partition{2}) == QPoly::one());
    CHECK(prod.coeff(Partition{1, 1}) == QPoly::one());
    // f * 1 = f
    SymFunc f = to_basis(s_gen({2, 1}), Basis::p);
    CHECK(mul(f, SymFunc::constant(QPoly::one())) == f);
    // s_2 * s_11 = s_31 + s_211
    SymFunc p2 = to_basis(mul(s_gen({2}), s_gen({1, 1})), Basis::s);
    SymFunc expect(Basis::s);
    expect.add_term(Partition{3, 1}, QPoly::one());
    expect.add_term(Partition{2, 1, 1}, QPoly::one());
    CHECK(p2 == expect);
}

TEST_CASE("hall inner product")
{
    for (const auto& lam : partitions_up_to(6)) {
        for (const auto& mu : partitions_up_to(6)) {
            if (lam.size() != mu.size())
                continue;
            QPoly want = lam == mu ? QPoly::one() : QPoly::zero();
            CHECK(hall(s_gen(lam), s_gen(mu)) == want);
            CHECK(hall(generator(Basis::h, lam), generator(Basis::m, mu)) == want);
        }
    }
    CHECK(hall(generator(Basis::p, Partition{2}), generator(Basis::p, Partition{2})) ==
          QPoly(Rat(2)));
    // Positive definiteness on rational elements.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_p(rng, 6, 4);
        if (f.is_zero())
            continue;
        QPoly n = hall(f, f);
        CHECK(n.degree() == 0);
        CHECK(n.coeff(0) > 0);
    }
}

TEST_CASE("omega involution")
{
    CHECK(omega(generator(Basis::h, Partition{3})) == generator(Basis::e, Partition{3}));
    CHECK(to_basis(omega(s_gen({2, 1})), Basis::s) == s_gen({2, 1}));
    SymFunc p3 = generator(Basis::p, Partition{3});
    CHECK(omega(p3) == p3);
    SymFunc p2 = generator(Basis::p, Partition{2});
    CHECK(omega(p2) == -p2);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_p(rng, 8, 5);
        CHECK(omega(omega(f)) == f);
        for (Basis b : {Basis::h, Basis::m, Basis::s})
            CHECK(to_basis(omega(to_basis(f, b)), Basis::p) == omega(f));
    }
    // omega s_{lambda/mu} = s_{lambda'/mu'}
    for (const auto& lam : partitions_up_to(7)) {
        for (const auto& mu : subpartitions(lam)) {
            CHECK(omega(skew_schur_p({lam, mu})) ==
                  skew_schur_p({lam.conjugate(), mu.conjugate()}));
        }
    }
}

TEST_CASE("plethysm by power sums")
{
    // s_1 o p_2 = p_2 = s_2 - s_11
    SymFunc sp = to_basis(plethysm_pt(s_gen({1}), 2), Basis::s);
    CHECK(sp.coeff(Partition{2}) == QPoly::one());
    CHECK(sp.coeff(Partition{1, 1}) == -QPoly::one());
    // f o p_1 = f
    SymFunc f = to_basis(s_gen({2, 1}), Basis::p);
    CHECK(plethysm_pt(f, 1) == f);
    // p_s o p_t = p_{st}
    CHECK(plethysm_pt(generator(Basis::p, Partition{2}), 3) ==
          generator(Basis::p, Partition{6}));
    // omega(f o p_t) = (-1)^{n(t-1)} (omega f) o p_t on homogeneous f
    for (const auto& lam : partitions_up_to(5)) {
        if (lam.empty())
            continue;
        for (int t : {2, 3}) {
            SymFunc lhs = omega(plethysm_pt(s_gen(lam), t));
            SymFunc rhs = plethysm_pt(omega(to_basis(s_gen(lam), Basis::p)), t);
            if ((lam.size() * (t - 1)) % 2 != 0)
                rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("verschiebung on the classical bases")
{
    // phi_2 h_4 = h_2, phi_2 h_3 = 0
    CHECK(to_basis(verschiebung(generator(Basis::h, Partition{4}), 2), Basis::h) ==
          generator(Basis::h, Partition{2}));
    CHECK(verschiebung(generator(Basis::h, Partition{3}), 2).is_zero());
    // phi_2 e_2 = -e_1
    CHECK(to_basis(verschiebung(generator(Basis::e, Partition{2}), 2), Basis::e) ==
          -generator(Basis::e, Partition{1}));
    // phi_2 p_22 = 4 p_11
    CHECK(verschiebung(generator(Basis::p, Partition{2, 2}), 2) ==
          generator(Basis::p, Partition{1, 1}).scaled(QPoly(Rat(4))));
    // Prop on whole h/e/p partitions, all parts divisible or not.
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(8)) {
            SymFunc h = verschiebung(generator(Basis::h, lam), t);
            auto shrunk = lam.shrink(t);
            if (!shrunk)
                CHECK(h.is_zero());
            else
                CHECK(to_basis(h, Basis::h) == generator(Basis::h, *shrunk));
            SymFunc e = verschiebung(generator(Basis::e, lam), t);
            if (!shrunk) {
                CHECK(e.is_zero());
            } else {
                int sign = (lam.size() * (t - 1) / t) % 2 == 0 ? 1 : -1;
                CHECK(to_basis(e, Basis::e) ==
                      generator(Basis::e, *shrunk).scaled(QPoly(Rat(sign))));
            }
        }
    }
}

TEST_CASE("adjointness of plethysm and verschiebung")
{
    std::mt19937 rng(4242);
    for (int t : {2, 3}) {
        for (int trial = 0; trial < 8; ++trial) {
            SymFunc f = random_p(rng, 4, 3);
            SymFunc g = random_p(rng, 8, 5);
            CHECK(hall(plethysm_pt(f, t), g) == hall(f, verschiebung(g, t)));
        }
    }
}

TEST_CASE("skew Schur functions")
{
    CHECK(skew_schur({Partition{2, 1}, Partition()}) == s_gen({2, 1}));
    SymFunc sk = skew_schur({Partition{2, 1}, Partition{1}});
    CHECK(sk.coeff(Partition{2}) == QPoly::one());
    CHECK(sk.coeff(Partition{1, 1}) == QPoly::one());
    CHECK(skew_schur({Partition{1}, Partition{2}}).is_zero());
    // s_{lambda/mu} = sum c^lambda_{mu nu} s_nu against the LR pairing.
    for (const auto& lam : partitions_up_to(7)) {
        for (const auto& mu : subpartitions(lam)) {
            SymFunc sk2 = skew_schur({lam, mu});
            for (const auto& [nu, coef] : sk2.terms())
                CHECK(QPoly(rat_from(lr_coeff(lam, {{mu, Partition()}, {nu, Partition()}}))) ==
                      coef);
        }
    }
    // Skew Jacobi-Trudi in h and e agree with the character route.
    for (const auto& lam : partitions_up_to(8)) {
        for (const auto& mu : subpartitions(lam)) {
            SymFunc via_chi = skew_schur_p({lam, mu});
            CHECK(to_basis(schur_jacobi_trudi_h({lam, mu}), Basis::p) == via_chi);
            CHECK(to_basis(schur_jacobi_trudi_e({lam, mu}), Basis::p) == via_chi);
        }
    }
}

TEST_CASE("verschiebung of skew Schur functions")
{
    // phi_2 s_2 = s_1, phi_2 s_11 = -s_1, phi_2 s_1 = 0
    CHECK(to_basis(verschiebung_schur({Partition{2}, Partition()}, 2), Basis::s) == s_gen({1}));
    CHECK(to_basis(verschiebung_schur({Partition{1, 1}, Partition()}, 2), Basis::s) ==
          -s_gen({1}));
    CHECK(verschiebung_schur({Partition{1}, Partition()}, 2).is_zero());
    for (int t : {2, 3}) {
        for (const auto& lam : partitions_up_to(7)) {
            for (const auto& mu : subpartitions(lam)) {
                CHECK(verschiebung_schur({lam, mu}, t) ==
                      verschiebung(skew_schur_p({lam, mu}), t));
            }
        }
    }
}

TEST_CASE("multi Littlewood-Richardson coefficients")
{
    CHECK(lr_coeff(Partition{2, 1}, {{Partition{1}, Partition()},
                                     {Partition{1, 1}, Partition()}}) == 1);
    CHECK(lr_coeff(Partition{2, 1}, {{Partition{2, 1}, Partition()},
                                     {Partition(), Partition()}}) == 1);
    CHECK(lr_coeff(Partition{2}, {{Partition{1}, Partition()}, {Partition{1}, Partition()}}) ==
          1);
    CHECK(lr_coeff(Partition{1, 1}, {{Partition{1}, Partition()},
                                     {Partition{1}, Partition()}}) == 1);
    CHECK(lr_coeff(Partition{3}, {{Partition{1}, Partition()}, {Partition{1, 1}, Partition()}}) ==
          0);
    // Symmetric in the factors.
    CHECK(lr_coeff(Partition{3, 2, 1}, {{Partition{2, 1}, Partition()},
                                        {Partition{2}, Partition()},
                                        {Partition{1}, Partition()}}) ==
          lr_coeff(Partition{3, 2, 1}, {{Partition{1}, Partition()},
                                        {Partition{2, 1}, Partition()},
                                        {Partition{2}, Partition()}}));
}

TEST_CASE("degree guard")
{
    ScopedDegreeCap cap(6);
    CHECK_THROWS_AS(to_basis(generator(Basis::p, Partition{7}), Basis::s), DegreeCapError);
    CHECK_THROWS_AS(chi(Partition{7}, Partition{7}), DegreeCapError);
    CHECK_NOTHROW(to_basis(generator(Basis::p, Partition{6}), Basis::s));
}

TEST_CASE("rendering and term order")
{
    SymFunc f(Basis::s);
    f.add_term(Partition{2}, QPoly::one());
    f.add_term(Partition(), QPoly::q());
    CHECK(f.to_string() == "q*s[] + s[2]");
    SymFunc g(Basis::s);
    g.add_term(Partition{1}, QPoly::one() + QPoly::q());
    CHECK(g.to_string() == "(1 + q)*s[1]");
}
