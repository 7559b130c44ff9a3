#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charfact/qpoly.hpp"

using namespace charfact;

TEST_CASE("constants and monomials")
{
    CHECK(QPoly::zero().is_zero());
    CHECK(QPoly::one().is_one());
    CHECK(QPoly::q().degree() == 1);
    CHECK(QPoly::monomial(Rat(0), 3).is_zero());
    CHECK(QPoly(Rat(5)).coeff(0) == 5);
    CHECK(QPoly(Rat(5)).coeff(7) == 0);
}

TEST_CASE("arithmetic is exact")
{
    QPoly a = QPoly(Rat(1, 2)) + QPoly::q();                 // 1/2 + q
    QPoly b = QPoly::q() * QPoly(Rat(2)) - QPoly(Rat(1));    // -1 + 2q
    QPoly prod = a * b;
    CHECK(prod.coeff(0) == Rat(-1, 2));
    CHECK(prod.coeff(1) == 0);  // -q/... (1/2)(2q) + q(-1) = 0
    CHECK(prod.coeff(2) == 2);
    CHECK(prod.eval(Rat(3)) == a.eval(Rat(3)) * b.eval(Rat(3)));
}

TEST_CASE("trailing zeros are never stored")
{
    QPoly a({Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(a.degree() == 1);
    QPoly b = QPoly::q() - QPoly::q();
    CHECK(b.is_zero());
    CHECK(b.degree() == -1);
}

TEST_CASE("exact division")
{
    QPoly u = QPoly::q();
    QPoly f = u.pow(3) + u.pow(2) * QPoly(Rat(2));
    CHECK(f.divide_exact(u.pow(2)) == u + QPoly(Rat(2)));
    CHECK_THROWS_AS((QPoly::one() + u).divide_exact(u), std::domain_error);
    CHECK_THROWS_AS(f.divide_exact(QPoly::zero()), std::domain_error);
}

TEST_CASE("variable scaling")
{
    QPoly f = QPoly::one() + QPoly::q() + QPoly::monomial(Rat(1), 2);
    QPoly g = f.scale_variable(Rat(-1));
    CHECK(g.coeff(0) == 1);
    CHECK(g.coeff(1) == -1);
    CHECK(g.coeff(2) == 1);
    CHECK(g.scale_variable(Rat(-1)) == f);
}

TEST_CASE("rendering")
{
    CHECK(QPoly::zero().to_string() == "0");
    CHECK(QPoly::one().to_string() == "1");
    CHECK(QPoly::q().to_string() == "q");
    CHECK((-QPoly::q()).to_string() == "-q");
    CHECK(QPoly::monomial(Rat(3, 2), 2).to_string() == "3/2*q^2");
    CHECK((QPoly::one() + QPoly::q()).to_string() == "1 + q");
    CHECK((QPoly(Rat(1)) - QPoly::q()).to_string() == "1 - q");
}
