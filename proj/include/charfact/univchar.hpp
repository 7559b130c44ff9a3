#ifndef CHARFACT_UNIVCHAR_HPP
#define CHARFACT_UNIVCHAR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charfact/littlewood.hpp"
#include "charfact/partition.hpp"
#include "charfact/qpoly.hpp"
#include "charfact/symfunc.hpp"

namespace charfact {

enum class CharFamily { sp, o, so_plus, so_minus };

const char* family_name(CharFamily f);
CharFamily family_from_name(const std::string& name);

// Universal character as a signed sum of skew Schur functions over
// (-1)-, 1- or 0-asymmetric inner shapes. Returned in the s-basis.
SymFunc universal_char(CharFamily family, const Partition& lambda);
// Jacobi-Trudi style determinant oracles; window >= l(lambda) for the h-form,
// window >= lambda_1 for the e-form.
SymFunc universal_char_det_h(CharFamily family, const Partition& lambda, int window);
SymFunc universal_char_det_e(CharFamily family, const Partition& lambda, int window);

// Coefficients of s_lambda in the chosen family (Character Interrelation):
// sums of LR coefficients over even-row / even-column / sign-weighted nu.
std::map<Partition, long long> schur_in_universal(const Partition& lambda, CharFamily family);

// Hamel-King symmetric function X_lambda(z; q): interpolates sp (z,q)=(-1,1),
// o (1,-1) and so± (0,±1). Returned in the s-basis with coefficients in q.
SymFunc hamel_king(const Partition& lambda, int z);
SymFunc hamel_king_det(const Partition& lambda, int z, int window);

// Two-alphabet symmetric function in the Schur (x) Schur basis.
class SymFunc2 {
public:
    using Key = std::pair<Partition, Partition>;

    const std::map<Key, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QPoly coeff(const Partition& a, const Partition& b) const;
    void add_term(const Partition& a, const Partition& b, const QPoly& c);

    SymFunc2& operator+=(const SymFunc2& o);
    SymFunc2 scaled(const QPoly& c) const;
    friend bool operator==(const SymFunc2&, const SymFunc2&) = default;

    // Set Y = X: sum of coef * s_a * s_b, in the p-basis.
    SymFunc diagonal() const;
    std::string to_string() const;

private:
    std::map<Key, QPoly> terms_;
};

// Rational universal character with the (a, b; c; u, v) deformation,
// computed from the skew Schur expansion (sum over nu with
// rk_c(nu) = rk_c(nu + (a^{c+rk_c(nu)}))). Requires c >= 0.
SymFunc2 rs2(const Partition& lambda, const Partition& mu, int a, int b, int c,
             const QPoly& u, const QPoly& v);
// Independent block-determinant route, with explicit window sizes
// k >= l(lambda), ell >= l(mu); normalized by u^c (-1)^{kc+C(c,2)}.
SymFunc2 rs2_det(const Partition& lambda, const Partition& mu, int a, int b, int c,
                 const QPoly& u, const QPoly& v, int k, int ell);

// Koike's rational universal character on one alphabet, rs2 at
// (a,b,c,u,v) = (0,0,0,1,1), diagonally restricted. p-basis.
SymFunc rs(const Partition& lambda, const Partition& mu);

// Diagonal rs_{lambda,mu}(a; c; q) := rs2(..., a, a, c, q, q)|_{Y=X}, with the
// swap convention rs_{lambda,mu}(a; -c; q) = rs_{mu,lambda}(a; c; q). p-basis.
SymFunc rs_diagonal(const Partition& lambda, const Partition& mu, int a, int c,
                    const QPoly& q);

struct Factor {
    enum class Kind { RS, CHI };
    Kind kind = Kind::RS;
    std::string label;   // "rs", "chi", or a classical name after re-tagging
    Partition first;
    Partition second;    // RS only
    int shift = 0;       // RS: the a-argument; CHI: the z-argument
    int c = 0;           // RS only; may be negative (swap convention applies)
};

// phi_t X_lambda(z; q) in factored form: prefactor epsilon(q), rs-pair
// factors over the quotient and the parity-dependent middle factors.
struct FactorizationResult {
    Partition lambda;
    int z = 0, t = 0;
    bool vanishes = false;
    QPoly epsilon;                // sign * q^{rk(core)}
    std::vector<int> kappa;
    Partition mu_c;               // minimal z-asymmetric partition with this kappa
    std::vector<Factor> factors;
    std::optional<Rat> q_value;   // set when a classical specialization was requested
};

FactorizationResult factor_verschiebung(const Partition& lambda, int z, int t);
// family in {so_plus, o, sp}: the (z, q) = (0,1), (1,-1), (-1,1) specializations.
FactorizationResult factor_classical(const Partition& lambda, int t, CharFamily family);

// Multiplies out epsilon * prod(factors), in the p-basis (q substituted when
// the result carries a classical specialization).
SymFunc expand_factorization(const FactorizationResult& r);

// phi_t X_lambda(z; q) computed directly from the skew Schur expansion and
// skew character values, independent of the factorization engine. p-basis.
SymFunc verschiebung_hamel_king_direct(const Partition& lambda, int z, int t);

}  // namespace charfact

#endif
