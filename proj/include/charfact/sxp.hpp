#ifndef CHARFACT_SXP_HPP
#define CHARFACT_SXP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charfact/characters.hpp"
#include "charfact/littlewood.hpp"
#include "charfact/partition.hpp"
#include "charfact/symfunc.hpp"
#include "charfact/univchar.hpp"

namespace charfact {

// One term of the Schur expansion of s_lambda o p_t: partitions nu with empty
// t-core, ribbon sign, multi-LR coefficient.
struct SXPTerm {
    Partition nu;
    int sign = 1;
    long long coeff = 0;
    friend bool operator==(const SXPTerm&, const SXPTerm&) = default;
};

// s_lambda o p_t = sum sgn_t(nu) c^lambda_{nu^(0),...,nu^(t-1)} s_nu.
std::vector<SXPTerm> sxp_schur(const Partition& lambda, int t);

// Schur coefficients of s_tau * (s_{outer/inner} o p_t): signed multi-LR
// coefficients over nu with nu/tau t-tileable.
std::map<Partition, long long> sxp_wildon(const Partition& tau, const SkewShape& shape, int t);

// chi^lambda(t*mu) = sgn_t(lambda) Ind(chi^{lambda^(0)} x ... )(mu), with the
// vanishing branch for nonempty t-core. Returns whether the identity holds.
bool littlewood_mult_check(const Partition& lambda, const Partition& mu, int t);

// Farahat: phi_t chi^{outer/inner} = sgn_t * induction product of the
// quotient skew characters, as class functions. Checked at class t*rho.
bool farahat_check(const SkewShape& shape, const Partition& rho, int t);

// Expansion coefficients of (family)_lambda o p_t in the same family's basis.
// Computed by degree-descending triangular elimination.
std::map<Partition, long long> a_coeff_table(const Partition& lambda, CharFamily family, int t);
// Same coefficients from the closed triple-sum formulas.
std::map<Partition, long long> a_coeff_lemma_table(const Partition& lambda, CharFamily family,
                                                   int t);
// Both routes; throws std::logic_error when they disagree.
long long a_coeff(const Partition& lambda, const Partition& nu, CharFamily family, int t);

// Stabilized branching coefficient: multi-LR sums over the quotient of mu
// (doubled middle eta when t is odd); zero when t-core(mu) is nonempty.
long long b_coeff(const Partition& lambda, const Partition& mu, int t);
// so+_lambda o p_t = sum_mu sgn_t(mu) b_{lambda,mu}(t) so+_mu.
bool universal_sxp_check(const Partition& lambda, int t);

// Levi weight data gamma_n(lambda; t) for the odd-orthogonal branching rule.
struct ConstructionSO {
    std::vector<std::vector<int>> gammas;  // one weight vector per GL block,
                                           // plus the SO block when t is odd
    std::vector<int> gl_sizes;
    std::optional<int> so_size;

    std::string group_descriptor() const;  // e.g. "GL3 x GL3 x SO5"
};
ConstructionSO construction_so(const Partition& lambda, int n, int t);

}  // namespace charfact

#endif
