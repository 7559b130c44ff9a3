#ifndef CHARFACT_SYMFUNC_HPP
#define CHARFACT_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "charfact/partition.hpp"
#include "charfact/qpoly.hpp"

namespace charfact {

enum class Basis { p, h, e, m, s };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// Basis-tagged finite linear combination of basis elements indexed by
// partitions, with coefficients in Q[q]. The power-sum basis is the
// computational hub: products concatenate indices, the Hall product is
// diagonal, plethysm by p_t and the Verschiebung operator are monomial
// substitutions.
class SymFunc {
public:
    SymFunc() : basis_(Basis::p) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b = Basis::p) { return SymFunc(b); }
    static SymFunc constant(const QPoly& c, Basis b = Basis::p);

    Basis basis() const { return basis_; }
    const std::map<Partition, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Largest |lambda| over stored terms; -1 for the zero element.
    int max_degree() const;
    QPoly coeff(const Partition& index) const;
    void set_coeff(const Partition& index, QPoly c);
    void add_term(const Partition& index, const QPoly& c);

    SymFunc& operator+=(const SymFunc& o);   // requires matching bases
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc operator-() const;
    SymFunc scaled(const QPoly& c) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // Substitute q -> value in every coefficient.
    SymFunc eval_q(const Rat& value) const;

    // Terms ordered by degree, then lexicographically; the rendering order.
    std::vector<std::pair<Partition, QPoly>> sorted_terms() const;
    std::string to_string() const;

private:
    Basis basis_;
    std::map<Partition, QPoly> terms_;  // no zero coefficients stored
};

// Basis element: for multiplicative bases (p, h, e) the index is the product
// of one-part generators; for s and m it is the basis element itself.
SymFunc generator(Basis b, const Partition& index);

SymFunc to_basis(const SymFunc& f, Basis target);

// Ring product. Operands in the same multiplicative basis stay there;
// otherwise the product is computed and returned in the p-basis.
SymFunc mul(const SymFunc& f, const SymFunc& g);

// Hall inner product; diagonal in the p-basis with weight z_lambda.
QPoly hall(const SymFunc& f, const SymFunc& g);

// The involution omega: h_k -> e_k, p_r -> (-1)^(r-1) p_r, s_l -> s_l'.
SymFunc omega(const SymFunc& f);

// f o p_t: in the p-basis p_lambda -> p_{t*lambda}.
SymFunc plethysm_pt(const SymFunc& f, int t);

// Verschiebung operator phi_t, the Hall adjoint of plethysm by p_t: kills
// p_lambda unless t divides every part, else t^{l(lambda)} p_{lambda/t}.
SymFunc verschiebung(const SymFunc& f, int t);

// Skew Schur function; zero when inner is not contained in outer. Returned in
// the s-basis.
SymFunc skew_schur(const SkewShape& shape);
// p-basis expansion of the skew Schur function via skew character values.
SymFunc skew_schur_p(const SkewShape& shape);

// phi_t s_{outer/inner} evaluated through the Littlewood decomposition:
// zero unless t-tileable, else sgn_t * prod_r s_{outer^(r)/inner^(r)}.
// Returned in the p-basis.
SymFunc verschiebung_schur(const SkewShape& shape, int t);

// phi_t s_{outer/inner} through skew character values: only the classes
// t*rho contribute, with weight t^{l(rho)} chi^{shape}(t rho) / z_{t rho}.
// Identical to verschiebung(skew_schur_p(shape), t), skipping the classes
// that are killed anyway; independent of the Littlewood route above.
SymFunc verschiebung_skew_direct(const SkewShape& shape, int t);

// Coefficient of s_lambda in prod s_{shape}; nonnegative integer.
long long lr_coeff(const Partition& lambda, const std::vector<SkewShape>& factors);

// Jacobi-Trudi determinants, kept as independent oracles for the character
// route: det(h_{lambda_i - mu_j - i + j}) and its dual over e.
SymFunc schur_jacobi_trudi_h(const SkewShape& shape);
SymFunc schur_jacobi_trudi_e(const SkewShape& shape);

// Determinant of a matrix over the SymFunc ring (expansion by minors with
// subset memoization). Entries should share one multiplicative basis.
SymFunc det_symfunc(const std::vector<std::vector<SymFunc>>& m);

}  // namespace charfact

#endif
