#ifndef CHARFACT_QPOLY_HPP
#define CHARFACT_QPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "charfact/rational.hpp"

namespace charfact {

// Dense univariate polynomial in the formal parameter q with exact rational
// coefficients. Trailing zero coefficients are never stored, so equality is
// structural.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant);          // NOLINT: implicit by design
    QPoly(long constant) : QPoly(Rat(constant)) {}
    explicit QPoly(std::vector<Rat> coeffs);

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Rat(1)); }
    // c * q^k
    static QPoly monomial(const Rat& c, int power);
    static QPoly q() { return monomial(Rat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of q^k, zero when k exceeds the degree.
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
    friend bool operator<(const QPoly& a, const QPoly& b);

    // Exact division; throws std::domain_error when the division leaves a
    // remainder or the divisor is zero.
    QPoly divide_exact(const QPoly& divisor) const;

    QPoly pow(int e) const;
    // Substitute q -> value.
    Rat eval(const Rat& value) const;
    // Substitute q -> c*q (c = -1 gives the parity twist used by duality laws).
    QPoly scale_variable(const Rat& c) const;

    bool all_integer() const;

    // "0", "1", "q", "-q^2", "1/2 + q", ... deterministic.
    std::string to_string() const;
    // True when the polynomial is a single monomial or constant, in which case
    // no parentheses are needed when it multiplies a basis element.
    bool is_monomial() const;

private:
    void trim();
    std::vector<Rat> coeffs_;  // coeffs_[k] multiplies q^k
};

}  // namespace charfact

#endif
