#include "charfact/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charfact {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts)
{
    normalize();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    normalize();
}

void Partition::normalize()
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text)
{
    if (text.empty() || text == "-")
        return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad token '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("Partition::parse: bad token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return Partition();
    std::vector<int> cols(parts_[0], 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length())
        return false;
    for (size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

int Partition::frobenius_rank() const
{
    int r = 0;
    while (r < length() && parts_[r] > r)
        ++r;
    return r;
}

std::optional<Partition> Partition::add_rectangle(int m, int ell) const
{
    if (ell < 0)
        return std::nullopt;
    std::vector<int> out;
    int rows = std::max(length(), ell);
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        int v = part(i) + (i < ell ? m : 0);
        if (v < 0)
            return std::nullopt;
        out.push_back(v);
    }
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] < out[i + 1])
            return std::nullopt;
    // interior zero followed by trailing zeros is fine; normalize trims
    return Partition(std::move(out));
}

Partition Partition::stretch(int t) const
{
    std::vector<int> out(parts_);
    for (int& v : out)
        v *= t;
    return Partition(std::move(out));
}

std::optional<Partition> Partition::shrink(int t) const
{
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int v : parts_) {
        if (v % t != 0)
            return std::nullopt;
        out.push_back(v / t);
    }
    return Partition(std::move(out));
}

Partition Partition::merge(const Partition& other) const
{
    std::vector<int> out(parts_);
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    if (parts_.empty())
        return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition conjugate(const Partition& p)
{
    return p.conjugate();
}

FrobeniusCoords frobenius(const Partition& p)
{
    FrobeniusCoords fc;
    Partition c = p.conjugate();
    int r = p.frobenius_rank();
    fc.arms.reserve(r);
    fc.legs.reserve(r);
    for (int i = 0; i < r; ++i) {
        fc.arms.push_back(p.part(i) - i - 1);
        fc.legs.push_back(c.part(i) - i - 1);
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc)
{
    if (fc.arms.size() != fc.legs.size())
        throw std::invalid_argument("from_frobenius: arm/leg length mismatch");
    int r = fc.rank();
    for (int i = 0; i < r; ++i) {
        if (fc.arms[i] < 0 || fc.legs[i] < 0)
            throw std::invalid_argument("from_frobenius: negative coordinate");
        if (i > 0 && (fc.arms[i - 1] <= fc.arms[i] || fc.legs[i - 1] <= fc.legs[i]))
            throw std::invalid_argument("from_frobenius: coordinates must strictly decrease");
    }
    // Row i (0-based, i < r) has arms[i] + i + 1 cells; rows past the diagonal
    // are recovered from the legs.
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
        rows.push_back(fc.arms[i] + i + 1);
    int depth = r > 0 ? fc.legs[0] + 1 : 0;
    for (int i = r; i < depth; ++i) {
        // Number of legs reaching below row i-1.
        int cnt = 0;
        for (int j = 0; j < r; ++j)
            if (fc.legs[j] + j + 1 > i)
                ++cnt;
        rows.push_back(cnt);
    }
    return Partition(std::move(rows));
}

int shifted_rank(const Partition& p, int c)
{
    if (c >= 0) {
        std::vector<int> rest(p.parts().begin() + std::min<size_t>(c, p.parts().size()),
                              p.parts().end());
        return Partition(std::move(rest)).frobenius_rank();
    }
    int k = -c;
    std::vector<int> cut;
    for (int v : p.parts())
        if (v > k)
            cut.push_back(v - k);
    return Partition(std::move(cut)).frobenius_rank();
}

std::vector<std::vector<int>> hook_lengths(const Partition& p)
{
    Partition c = p.conjugate();
    std::vector<std::vector<int>> grid(p.length());
    for (int i = 0; i < p.length(); ++i) {
        grid[i].resize(p.part(i));
        for (int j = 0; j < p.part(i); ++j)
            grid[i][j] = (p.part(i) - j - 1) + (c.part(j) - i - 1) + 1;
    }
    return grid;
}

bool is_t_core(const Partition& p, int t)
{
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            if (h % t == 0)
                return false;
    return true;
}

bool is_z_asymmetric(const Partition& p, int z)
{
    if (z < 0)
        return is_z_asymmetric(p.conjugate(), -z);
    FrobeniusCoords fc = frobenius(p);
    for (int i = 0; i < fc.rank(); ++i)
        if (fc.arms[i] != fc.legs[i] + z)
            return false;
    return true;
}

namespace {

void enumerate_legs(int z, int budget, int max_leg, std::vector<int>& legs,
                    std::vector<Partition>& out)
{
    // Current legs determine a valid z-asymmetric partition.
    FrobeniusCoords fc;
    fc.legs = legs;
    fc.arms = legs;
    for (int& a : fc.arms)
        a += z;
    out.push_back(from_frobenius(fc));
    // Diagonal hooks have size 2u + z + 1; extend by a strictly smaller leg.
    for (int u = max_leg; u >= 0; --u) {
        int cost = 2 * u + z + 1;
        if (cost > budget)
            continue;
        legs.push_back(u);
        enumerate_legs(z, budget - cost, u - 1, legs, out);
        legs.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_z_asymmetric(int z, int max_size)
{
    if (z < 0) {
        auto conj = enumerate_z_asymmetric(-z, max_size);
        for (auto& p : conj)
            p = p.conjugate();
        std::sort(conj.begin(), conj.end(), [](const Partition& a, const Partition& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return conj;
    }
    std::vector<Partition> out;
    std::vector<int> legs;
    int max_leg = (max_size - z - 1) / 2;
    enumerate_legs(z, max_size, std::max(max_leg, -1), legs, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::optional<RibbonInfo> ribbon_info(const SkewShape& shape)
{
    if (!shape.valid())
        return std::nullopt;
    const Partition& out = shape.outer;
    const Partition& in = shape.inner;
    int cells = shape.size();
    if (cells == 0)
        return std::nullopt;

    // No 2x2 block: rows i and i+1 may overlap in at most one column.
    // Edge-connectivity: consecutive nonempty rows must share exactly one
    // column boundary, and no row in between may be empty.
    int first_row = -1, last_row = -1;
    for (int i = 0; i < out.length(); ++i) {
        if (out.part(i) - in.part(i) > 0) {
            if (first_row < 0)
                first_row = i;
            last_row = i;
        }
    }
    int rows_occupied = 0;
    for (int i = first_row; i <= last_row; ++i) {
        int lo = in.part(i), hi = out.part(i);  // occupied columns [lo, hi)
        if (hi - lo <= 0)
            return std::nullopt;  // gap: not edge-connected
        ++rows_occupied;
        if (i < last_row) {
            int lo2 = in.part(i + 1), hi2 = out.part(i + 1);
            // row i+1 sits weakly left of row i in a skew shape
            if (hi2 - lo > 1)
                return std::nullopt;  // 2x2 block
            if (hi2 - lo < 1)
                return std::nullopt;  // rows touch at no edge
            (void)lo2;
        }
    }
    return RibbonInfo{cells, rows_occupied - 1};
}

std::vector<Partition> partitions_of(int n)
{
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0)
        rec(n, n == 0 ? 1 : n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        if (row == outer.length() || prev == 0) {
            out.push_back(Partition(cur));
            return;
        }
        rec(row + 1, 0);  // stop here (all later rows zero)
        for (int v = 1; v <= std::min(outer.part(row), prev); ++v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, outer.part(0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace charfact
