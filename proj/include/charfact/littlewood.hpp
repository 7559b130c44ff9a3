#ifndef CHARFACT_LITTLEWOOD_HPP
#define CHARFACT_LITTLEWOOD_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "charfact/partition.hpp"

namespace charfact {

// Integer bead positions m_i = lambda_i - i for i = 1..N (the half-integer
// beta set shifted by -1/2). Extending N only appends m = -i values.
struct BetaEncoding {
    std::vector<int> beads;  // strictly decreasing
    int window = 0;          // N

    static BetaEncoding of(const Partition& p, int window);
    Partition to_partition() const;
};

// Littlewood decomposition of a partition: t-core, t-quotient and the
// kappa-vector of per-runner bead surpluses (summing to zero).
struct CoreQuotient {
    int t = 0;
    Partition core;
    std::vector<Partition> quotient;
    std::vector<int> kappa;

    int quotient_size() const;
    friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

// extra_depth pads the bead window by extra_depth*t more beads; the result is
// window-independent (tested invariant).
CoreQuotient core_quotient(const Partition& p, int t, int extra_depth = 0);
Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient,
                             int t);
Partition t_core(const Partition& p, int t);
// The unique t-core with the given kappa-vector (entries must sum to zero).
Partition core_from_kappa(const std::vector<int>& kappa, int t);
// |core| = sum(t*c_r^2/2 + r*c_r).
int core_size_from_kappa(const std::vector<int>& kappa, int t);

bool is_t_tileable(const SkewShape& shape, int t);

// (-1)^(total ribbon height) over any t-ribbon tiling of the shape, computed
// by bead moves. Throws when the shape is not t-tileable.
int sgn_t(const SkewShape& shape, int t);
// Same sign for the straight shape lambda / t-core(lambda).
int sgn_t_from_core(const Partition& p, int t);

// Test oracle: peel t-ribbons geometrically (backtracking search for a full
// decomposition). strategy 0 prefers the highest removable ribbon, 1 the
// lowest. Returns nothing when no decomposition exists.
std::optional<int> sgn_via_peeling(const SkewShape& shape, int t, int strategy);

// Permutation sorting (lambda_1-1, ..., lambda_n-n) by residue mod t
// (increasing), values decreasing within a residue class. One-line notation,
// 1-based, together with its sign.
std::pair<std::vector<int>, int> sigma_perm(const Partition& p, int t, int n);
int sigma_sign(const Partition& p, int t, int n);

// Symmetry conditions on kappa-vectors: c_r + c_{z-r-1} = 0 for 0 <= r < z and
// c_s + c_{t+z-s-1} = 0 for z <= s < t.
bool kappa_in_C(const std::vector<int>& kappa, int z, int t);

// Minimal z-asymmetric partition with the given kappa-vector; z may be any
// integer (z = a*t + b; negative z handled by conjugation).
Partition minimal_z_asym(const std::vector<int>& kappa, int z, int t);

// Witness for the structure of the Littlewood decomposition of a
// z-asymmetric partition: nu[r] governs the runner pair (r, b-r-1) with
// rectangle width a+1, xi[s] the pair (s, t+b-s-1) with width a.
struct ZAsymWitness {
    int z = 0, t = 0, a = 0, b = 0;
    bool conjugated = false;  // set when z < 0 and the witness is for lambda'
    std::vector<int> kappa;   // of the (possibly conjugated) decomposition
    std::map<int, Partition> nu;
    std::map<int, Partition> xi;
};

std::optional<ZAsymWitness> zasym_witness(const Partition& p, int z, int t);
// Rebuilds the partition a witness describes.
Partition reconstruct_from_witness(const ZAsymWitness& w);

// rk(lambda) = rk(core) + sum_r rk_{c_r}(lambda^(r)).
bool rank_decomposition_check(const Partition& p, int t);

}  // namespace charfact

#endif
