#include "charfact/characters.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "charfact/degree_guard.hpp"

namespace charfact {

namespace {

std::atomic<int> g_degree_cap{14};

struct ChiKey {
    Partition outer;
    Partition inner;
    Partition suffix;  // remaining class parts, weakly decreasing
    friend bool operator==(const ChiKey&, const ChiKey&) = default;
};

struct ChiKeyHash {
    size_t operator()(const ChiKey& k) const
    {
        PartitionHash h;
        size_t a = h(k.outer), b = h(k.inner), c = h(k.suffix);
        a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
        a ^= c + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
        return a;
    }
};

std::unordered_map<ChiKey, long long, ChiKeyHash> g_chi_memo;
std::mutex g_chi_mutex;

// Removing an s-ribbon = moving a bead m -> m-s on the Maya diagram; the
// height is the number of beads jumped over.
std::vector<std::pair<Partition, int>> ribbon_removals(const Partition& nu, int s)
{
    std::vector<std::pair<Partition, int>> out;
    int len = nu.length();
    int floor = -len - 1;
    std::vector<int> beads(len);
    for (int i = 1; i <= len; ++i)
        beads[i - 1] = nu.part(i - 1) - i;  // strictly decreasing
    auto occupied = [&](int m) {
        if (m <= floor)
            return true;
        for (int b : beads)
            if (b == m)
                return true;
        return false;
    };
    for (int i = 0; i < len; ++i) {
        int m = beads[i], dst = m - s;
        if (occupied(dst))
            continue;
        int between = 0;
        for (int b : beads)
            if (b > dst && b < m)
                ++between;
        std::vector<int> moved(beads);
        moved[i] = dst;
        std::sort(moved.begin(), moved.end(), std::greater<int>());
        std::vector<int> parts;
        int n2 = static_cast<int>(moved.size());
        for (int j = 0; j < n2; ++j) {
            int part = (moved[j] - floor - 1) - (n2 - 1 - j);
            if (part > 0)
                parts.push_back(part);
            else
                break;
        }
        out.emplace_back(Partition(std::move(parts)), between);
    }
    return out;
}

long long chi_rec(const Partition& outer, const Partition& inner,
                  const std::vector<int>& cls, size_t k)
{
    if (k == cls.size())
        return outer == inner ? 1 : 0;
    if (!outer.contains(inner))
        return 0;
    ChiKey key{outer, inner, Partition(std::vector<int>(cls.begin() + k, cls.end()))};
    {
        std::lock_guard<std::mutex> lock(g_chi_mutex);
        auto it = g_chi_memo.find(key);
        if (it != g_chi_memo.end())
            return it->second;
    }
    long long total = 0;
    for (const auto& [next, height] : ribbon_removals(outer, cls[k])) {
        long long sub = chi_rec(next, inner, cls, k + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_chi_mutex);
    g_chi_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

int degree_cap()
{
    return g_degree_cap.load();
}

void set_degree_cap(int cap)
{
    g_degree_cap.store(cap);
}

void require_degree(int n)
{
    int cap = g_degree_cap.load();
    if (n > cap)
        throw DegreeCapError("degree " + std::to_string(n) + " exceeds the configured cap " +
                             std::to_string(cap) + " on character-table work");
}

long long chi(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("chi: |lambda| != |mu|");
    require_degree(lambda.size());
    return chi_rec(lambda, Partition(), mu.parts(), 0);
}

long long chi_skew(const SkewShape& shape, const Partition& mu)
{
    if (shape.size() != mu.size())
        throw std::invalid_argument("chi_skew: |outer| - |inner| != |mu|");
    if (!shape.valid())
        return 0;
    require_degree(shape.outer.size());
    return chi_rec(shape.outer, shape.inner, mu.parts(), 0);
}

Int z_factor(const Partition& p)
{
    Int z = 1;
    int run = 0;
    for (int i = 0; i < p.length(); ++i) {
        ++run;
        Int part = p.part(i);
        z *= part;
        if (i + 1 == p.length() || p.part(i + 1) != p.part(i)) {
            for (int m = 2; m <= run; ++m)
                z *= m;
            run = 0;
        }
    }
    return z;
}

CharValueTable CharValueTable::build(int n)
{
    require_degree(n);
    CharValueTable t;
    t.n = n;
    t.index = partitions_of(n);
    for (const auto& lambda : t.index)
        for (const auto& mu : t.index)
            t.values[{lambda, mu}] = chi(lambda, mu);
    return t;
}

long long CharValueTable::at(const Partition& lambda, const Partition& mu) const
{
    auto it = values.find({lambda, mu});
    if (it == values.end())
        throw std::invalid_argument("CharValueTable::at: not a pair of partitions of n");
    return it->second;
}

bool CharValueTable::column_orthogonal() const
{
    for (const auto& mu : index) {
        for (const auto& rho : index) {
            Int acc = 0;
            for (const auto& lambda : index)
                acc += int_from(at(lambda, mu)) * int_from(at(lambda, rho));
            if (mu == rho ? (acc != z_factor(mu)) : (acc != 0))
                return false;
        }
    }
    return true;
}

bool CharValueTable::row_orthogonal() const
{
    for (const auto& lambda : index) {
        for (const auto& nu : index) {
            Rat acc(0);
            for (const auto& mu : index)
                acc += Rat(int_from(at(lambda, mu)) * int_from(at(nu, mu))) / Rat(z_factor(mu));
            if (lambda == nu ? (acc != 1) : (acc != 0))
                return false;
        }
    }
    return true;
}

}  // namespace charfact
