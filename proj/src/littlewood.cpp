#include "charfact/littlewood.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace charfact {

namespace {

int floor_mod(int m, int t)
{
    int r = m % t;
    return r < 0 ? r + t : r;
}

// Reads a partition off a Maya diagram given as the explicit bead positions
// (strictly decreasing) together with a floor M below which every position is
// a bead. Part j is the number of empty positions below the j-th bead.
Partition partition_from_positions(const std::vector<int>& desc, int floor)
{
    std::vector<int> parts;
    int n = static_cast<int>(desc.size());
    for (int j = 0; j < n; ++j) {
        int slots = desc[j] - floor - 1;
        int occupied = n - 1 - j;
        int part = slots - occupied;
        if (part > 0)
            parts.push_back(part);
        else
            break;
    }
    return Partition(std::move(parts));
}

struct Runners {
    int t = 0;
    int depth = 0;  // K: each runner has implicit beads at every p <= -K-1
    std::vector<std::vector<int>> pos;  // per-runner explicit positions, descending
};

// Window of N = t*K beads; with N a multiple of t every runner has the same
// implicit floor, which keeps the quotient labels canonical.
Runners runners_of(const Partition& p, int t, int extra_depth = 0)
{
    Runners r;
    r.t = t;
    r.depth = p.length() / t + 2 + extra_depth;
    int window = t * r.depth;
    r.pos.assign(t, {});
    for (int i = 1; i <= window; ++i) {
        int m = p.part(i - 1) - i;
        int res = floor_mod(m, t);
        r.pos[res].push_back((m - res) / t);
    }
    for (auto& v : r.pos)
        std::sort(v.begin(), v.end(), std::greater<int>());
    return r;
}

Partition partition_from_global(const Runners& r)
{
    std::vector<int> global;
    for (int res = 0; res < r.t; ++res)
        for (int p : r.pos[res])
            global.push_back(r.t * p + res);
    std::sort(global.begin(), global.end(), std::greater<int>());
    return partition_from_positions(global, -(r.t * r.depth) - 1);
}

}  // namespace

BetaEncoding BetaEncoding::of(const Partition& p, int window)
{
    if (window < p.length())
        throw std::invalid_argument("BetaEncoding: window shorter than the partition");
    BetaEncoding b;
    b.window = window;
    b.beads.reserve(window);
    for (int i = 1; i <= window; ++i)
        b.beads.push_back(p.part(i - 1) - i);
    return b;
}

Partition BetaEncoding::to_partition() const
{
    return partition_from_positions(beads, -window - 1);
}

int CoreQuotient::quotient_size() const
{
    int s = 0;
    for (const auto& q : quotient)
        s += q.size();
    return s;
}

CoreQuotient core_quotient(const Partition& p, int t, int extra_depth)
{
    if (t < 2)
        throw std::invalid_argument("core_quotient: t must be at least 2");
    Runners r = runners_of(p, t, extra_depth);
    CoreQuotient cq;
    cq.t = t;
    cq.kappa.resize(t);
    cq.quotient.resize(t);
    for (int res = 0; res < t; ++res) {
        cq.kappa[res] = static_cast<int>(r.pos[res].size()) - r.depth;
        cq.quotient[res] = partition_from_positions(r.pos[res], -r.depth - 1);
    }
    // Flush every runner left to obtain the core.
    Runners flush = r;
    for (int res = 0; res < t; ++res) {
        int count = static_cast<int>(r.pos[res].size());
        flush.pos[res].clear();
        for (int j = 0; j < count; ++j)
            flush.pos[res].push_back(-r.depth - 1 + count - j);
    }
    cq.core = partition_from_global(flush);
    return cq;
}

Partition t_core(const Partition& p, int t)
{
    return core_quotient(p, t).core;
}

Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient,
                             int t)
{
    if (t < 2)
        throw std::invalid_argument("from_core_quotient: t must be at least 2");
    if (static_cast<int>(quotient.size()) != t)
        throw std::invalid_argument("from_core_quotient: quotient must have t entries");
    if (!is_t_core(core, t))
        throw std::invalid_argument("from_core_quotient: core contains a hook divisible by t");
    std::vector<int> kappa = core_quotient(core, t).kappa;

    Runners r;
    r.t = t;
    int max_len = 0, max_c = 0;
    for (int res = 0; res < t; ++res) {
        max_len = std::max(max_len, quotient[res].length());
        max_c = std::max(max_c, std::abs(kappa[res]));
    }
    r.depth = max_len + max_c + 2;
    r.pos.assign(t, {});
    for (int res = 0; res < t; ++res) {
        int count = r.depth + kappa[res];
        for (int j = 1; j <= count; ++j)
            r.pos[res].push_back(quotient[res].part(j - 1) - j + kappa[res]);
    }
    return partition_from_global(r);
}

int core_size_from_kappa(const std::vector<int>& kappa, int t)
{
    long sq = 0, lin = 0;
    for (size_t r = 0; r < kappa.size(); ++r) {
        sq += static_cast<long>(kappa[r]) * kappa[r];
        lin += static_cast<long>(r) * kappa[r];
    }
    long num = static_cast<long>(t) * sq;
    if (num % 2 != 0)
        throw std::logic_error("core_size_from_kappa: odd total");
    return static_cast<int>(num / 2 + lin);
}

Partition core_from_kappa(const std::vector<int>& kappa, int t)
{
    if (static_cast<int>(kappa.size()) != t)
        throw std::invalid_argument("core_from_kappa: kappa must have t entries");
    if (std::accumulate(kappa.begin(), kappa.end(), 0) != 0)
        throw std::invalid_argument("core_from_kappa: entries must sum to zero");

    static std::map<std::pair<std::vector<int>, int>, Partition> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({kappa, t});
        if (it != memo.end())
            return it->second;
    }

    Runners r;
    r.t = t;
    int max_c = 0;
    for (int c : kappa)
        max_c = std::max(max_c, std::abs(c));
    r.depth = max_c + 1;
    r.pos.assign(t, {});
    for (int res = 0; res < t; ++res) {
        int count = r.depth + kappa[res];
        for (int j = 0; j < count; ++j)
            r.pos[res].push_back(-r.depth - 1 + count - j);
    }
    Partition core = partition_from_global(r);

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(kappa, t), core);
    return core;
}

bool is_t_tileable(const SkewShape& shape, int t)
{
    if (!shape.valid())
        throw std::invalid_argument("is_t_tileable: inner not contained in outer");
    CoreQuotient a = core_quotient(shape.outer, t);
    CoreQuotient b = core_quotient(shape.inner, t);
    if (a.core != b.core)
        return false;
    for (int r = 0; r < t; ++r)
        if (!a.quotient[r].contains(b.quotient[r]))
            return false;
    return true;
}

int sgn_t_from_core(const Partition& p, int t)
{
    if (t < 2)
        throw std::invalid_argument("sgn_t: t must be at least 2");
    int depth = p.length() / t + 2;
    int window = t * depth;
    int floor = -window - 1;
    std::set<int> beads;
    for (int i = 1; i <= window; ++i)
        beads.insert(p.part(i - 1) - i);

    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = beads.begin(); it != beads.end(); ++it) {
            int m = *it;
            int dst = m - t;
            if (dst <= floor || beads.count(dst))
                continue;
            // height of the removed ribbon = beads strictly between dst and m
            int between = static_cast<int>(std::distance(beads.upper_bound(dst), it));
            if (between % 2 != 0)
                sign = -sign;
            beads.erase(it);
            beads.insert(dst);
            moved = true;
            break;
        }
    }
    return sign;
}

int sgn_t(const SkewShape& shape, int t)
{
    if (!is_t_tileable(shape, t))
        throw std::invalid_argument("sgn_t: shape is not t-tileable");
    return sgn_t_from_core(shape.outer, t) * sgn_t_from_core(shape.inner, t);
}

namespace {

// Every removable t-rim-hook of nu corresponds to a cell with hook length t.
// Returns (partition after removal, ribbon height), geometrically.
std::vector<std::pair<Partition, int>> rim_hook_removals(const Partition& nu, int t)
{
    std::vector<std::pair<Partition, int>> out;
    Partition conj = nu.conjugate();
    for (int i = 1; i <= nu.length(); ++i) {
        for (int j = 1; j <= nu.part(i - 1); ++j) {
            int hook = (nu.part(i - 1) - j) + (conj.part(j - 1) - i) + 1;
            if (hook != t)
                continue;
            int ht = conj.part(j - 1) - i;  // leg length
            std::vector<int> parts(nu.parts());
            parts.resize(std::max(nu.length(), i + ht), 0);
            for (int k = i; k < i + ht; ++k)
                parts[k - 1] = nu.part(k);  // row k picks up row k+1, shifted
            for (int k = i; k < i + ht; ++k)
                parts[k - 1] -= 1;
            parts[i + ht - 1] = j - 1;
            out.emplace_back(Partition(std::move(parts)), ht);
        }
    }
    return out;
}

bool peel_search(const Partition& cur, const Partition& inner, int t, int strategy, int& sign)
{
    if (cur == inner)
        return true;
    if (cur.size() < inner.size() + t)
        return false;
    auto removals = rim_hook_removals(cur, t);
    if (strategy == 1)
        std::reverse(removals.begin(), removals.end());
    for (const auto& [next, ht] : removals) {
        if (!next.contains(inner))
            continue;
        int saved = sign;
        if (ht % 2 != 0)
            sign = -sign;
        if (peel_search(next, inner, t, strategy, sign))
            return true;
        sign = saved;
    }
    return false;
}

}  // namespace

std::optional<int> sgn_via_peeling(const SkewShape& shape, int t, int strategy)
{
    if (!shape.valid())
        return std::nullopt;
    int sign = 1;
    if (!peel_search(shape.outer, shape.inner, t, strategy, sign))
        return std::nullopt;
    return sign;
}

std::pair<std::vector<int>, int> sigma_perm(const Partition& p, int t, int n)
{
    if (n < p.length())
        throw std::invalid_argument("sigma_perm: n must be at least l(lambda)");
    std::vector<int> value(n);
    for (int i = 1; i <= n; ++i)
        value[i - 1] = p.part(i - 1) - i;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ra = floor_mod(value[a], t), rb = floor_mod(value[b], t);
        if (ra != rb)
            return ra < rb;
        return value[a] > value[b];
    });
    std::vector<int> word(n);
    for (int j = 0; j < n; ++j)
        word[j] = idx[j] + 1;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (word[i] > word[j])
                ++inversions;
    return {word, inversions % 2 == 0 ? 1 : -1};
}

int sigma_sign(const Partition& p, int t, int n)
{
    return sigma_perm(p, t, n).second;
}

bool kappa_in_C(const std::vector<int>& kappa, int z, int t)
{
    if (z < 0 || z > t - 1)
        throw std::invalid_argument("kappa_in_C: need 0 <= z <= t-1");
    for (int r = 0; r <= z - 1; ++r)
        if (kappa[r] + kappa[z - r - 1] != 0)
            return false;
    for (int s = z; s <= t - 1; ++s)
        if (kappa[s] + kappa[t + z - s - 1] != 0)
            return false;
    return true;
}

Partition minimal_z_asym(const std::vector<int>& kappa, int z, int t)
{
    if (static_cast<int>(kappa.size()) != t)
        throw std::invalid_argument("minimal_z_asym: kappa must have t entries");
    if (z < 0) {
        std::vector<int> conj(kappa.rbegin(), kappa.rend());
        for (int& c : conj)
            c = -c;
        return minimal_z_asym(conj, -z, t).conjugate();
    }
    int b = z % t;
    int a = z / t;
    if (!kappa_in_C(kappa, b, t))
        throw std::invalid_argument("minimal_z_asym: kappa not in C_{z;t}");
    std::vector<Partition> quotient(t);
    for (int r = 0; r < b; ++r)
        if (kappa[r] > 0)
            quotient[r] = Partition(std::vector<int>(kappa[r], a + 1));
    if (a > 0)
        for (int s = b; s < t; ++s)
            if (kappa[s] > 0)
                quotient[s] = Partition(std::vector<int>(kappa[s], a));
    Partition result = from_core_quotient(core_from_kappa(kappa, t), quotient, t);
    if (!is_z_asymmetric(result, z))
        throw std::logic_error("minimal_z_asym: constructed partition is not z-asymmetric");
    return result;
}

namespace {

// Solves lambda_i = nu + (w^{c_i+k}), lambda_j = nu' + (w^k) with
// k = rk_{c_i}(nu); scans k upward for the unique consistent choice.
std::optional<Partition> extract_pair_witness(const Partition& li, const Partition& lj, int w,
                                              int ci)
{
    int bound = std::max(li.length(), lj.length()) + std::abs(ci) + 2;
    for (int k = 0; k <= bound; ++k) {
        auto nu = li.add_rectangle(-w, ci + k);
        if (!nu)
            continue;
        if (shifted_rank(*nu, ci) != k)
            continue;
        auto back = nu->conjugate().add_rectangle(w, k);
        if (back && *back == lj)
            return nu;
    }
    return std::nullopt;
}

// lambda = (u+w | u) decomposes as nu + (w^{rk(nu)}) with nu = (u | u).
std::optional<Partition> extract_middle_witness(const Partition& lam, int w)
{
    if (!is_z_asymmetric(lam, w))
        return std::nullopt;
    FrobeniusCoords fc = frobenius(lam);
    FrobeniusCoords self;
    self.arms = fc.legs;
    self.legs = fc.legs;
    Partition nu = from_frobenius(self);
    auto back = nu.add_rectangle(w, nu.frobenius_rank());
    if (!back || *back != lam)
        return std::nullopt;
    return nu;
}

}  // namespace

std::optional<ZAsymWitness> zasym_witness(const Partition& p, int z, int t)
{
    if (t < 2)
        throw std::invalid_argument("zasym_witness: t must be at least 2");
    if (z < 0) {
        auto w = zasym_witness(p.conjugate(), -z, t);
        if (w) {
            w->conjugated = true;
            w->z = z;
        }
        return w;
    }
    if (!is_z_asymmetric(p, z))
        return std::nullopt;

    ZAsymWitness w;
    w.z = z;
    w.t = t;
    w.b = z % t;
    w.a = z / t;
    CoreQuotient cq = core_quotient(p, t);
    w.kappa = cq.kappa;
    if (!kappa_in_C(cq.kappa, w.b, t))
        return std::nullopt;

    for (int r = 0; r <= (w.b - 1) / 2 && r < w.b; ++r) {
        int rs = w.b - 1 - r;
        if (r == rs) {
            auto nu = extract_middle_witness(cq.quotient[r], w.a + 1);
            if (!nu)
                return std::nullopt;
            w.nu[r] = *nu;
        } else {
            int i = cq.kappa[r] >= 0 ? r : rs;
            int j = w.b - 1 - i;
            auto nu = extract_pair_witness(cq.quotient[i], cq.quotient[j], w.a + 1,
                                           cq.kappa[i]);
            if (!nu)
                return std::nullopt;
            w.nu[i] = *nu;
        }
    }
    for (int s = w.b; s <= (t + w.b - 1) / 2 && s < t; ++s) {
        int ss = t + w.b - 1 - s;
        if (s == ss) {
            auto xi = extract_middle_witness(cq.quotient[s], w.a);
            if (!xi)
                return std::nullopt;
            w.xi[s] = *xi;
        } else {
            int i = cq.kappa[s] >= 0 ? s : ss;
            int j = t + w.b - 1 - i;
            auto xi = extract_pair_witness(cq.quotient[i], cq.quotient[j], w.a, cq.kappa[i]);
            if (!xi)
                return std::nullopt;
            w.xi[i] = *xi;
        }
    }
    return w;
}

Partition reconstruct_from_witness(const ZAsymWitness& w)
{
    std::vector<Partition> quotient(w.t);
    auto place = [&](int i, int partner, const Partition& nu, int width) {
        int ci = w.kappa[i];
        int k = shifted_rank(nu, ci);
        auto qi = nu.add_rectangle(width, ci + k);
        if (!qi)
            throw std::invalid_argument("reconstruct_from_witness: inconsistent witness");
        quotient[i] = *qi;
        if (partner != i) {
            auto qj = nu.conjugate().add_rectangle(width, k);
            if (!qj)
                throw std::invalid_argument("reconstruct_from_witness: inconsistent witness");
            quotient[partner] = *qj;
        }
    };
    for (const auto& [i, nu] : w.nu)
        place(i, w.b - 1 - i, nu, w.a + 1);
    for (const auto& [i, xi] : w.xi)
        place(i, w.t + w.b - 1 - i, xi, w.a);
    Partition out = from_core_quotient(core_from_kappa(w.kappa, w.t), quotient, w.t);
    return w.conjugated ? out.conjugate() : out;
}

bool rank_decomposition_check(const Partition& p, int t)
{
    CoreQuotient cq = core_quotient(p, t);
    int rhs = cq.core.frobenius_rank();
    for (int r = 0; r < t; ++r)
        rhs += shifted_rank(cq.quotient[r], cq.kappa[r]);
    return p.frobenius_rank() == rhs;
}

}  // namespace charfact
