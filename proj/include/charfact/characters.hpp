#ifndef CHARFACT_CHARACTERS_HPP
#define CHARFACT_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "charfact/partition.hpp"
#include "charfact/rational.hpp"

namespace charfact {

// Irreducible symmetric-group character value chi^lambda(mu) by ribbon
// removal with sign (-1)^height. Values are memoized globally; safe for
// concurrent use.
long long chi(const Partition& lambda, const Partition& mu);

// Skew character value chi^{lambda/inner}(mu).
long long chi_skew(const SkewShape& shape, const Partition& mu);

// z_lambda = prod_i m_i(lambda)! * i^{m_i(lambda)}.
Int z_factor(const Partition& p);

// Full character table of S_n: values[(lambda, mu)] = chi^lambda(mu).
struct CharValueTable {
    int n = 0;
    std::vector<Partition> index;  // partitions of n, fixed order
    std::map<std::pair<Partition, Partition>, long long> values;

    static CharValueTable build(int n);
    long long at(const Partition& lambda, const Partition& mu) const;
    // Column orthogonality: sum_lambda chi^lambda(mu) chi^lambda(rho) = z_mu delta.
    bool column_orthogonal() const;
    // Row orthogonality: sum_mu chi^lambda(mu) chi^nu(mu) / z_mu = delta.
    bool row_orthogonal() const;
};

}  // namespace charfact

#endif
