#ifndef CHARFACT_PARTITION_HPP
#define CHARFACT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace charfact {

// Integer partition: weakly decreasing positive parts, stored trimmed so that
// equality is structural. The empty list is the empty partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Parses "6,5,5,1"; "-" (or "") denotes the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                       // |lambda|
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;   // cell-wise containment
    // Number of diagonal cells.
    int frobenius_rank() const;

    // Adds m to the first ell parts (m may be negative); absent when the
    // result is not a partition.
    std::optional<Partition> add_rectangle(int m, int ell) const;
    // Multiplies every part by t.
    Partition stretch(int t) const;
    // Divides every part by t; absent unless t divides every part.
    std::optional<Partition> shrink(int t) const;
    // Parts concatenated and re-sorted (p-basis product index).
    Partition merge(const Partition& other) const;

    std::string to_string() const;          // "6,5,5,1" or "-"

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    void normalize();
    std::vector<int> parts_;
};

// (arms | legs) of the diagonal cells; both strictly decreasing, same length.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    int rank() const { return static_cast<int>(arms.size()); }
    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {}

    bool valid() const { return outer.contains(inner); }
    int size() const { return outer.size() - inner.size(); }
    std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend std::strong_ordering operator<=>(const SkewShape&, const SkewShape&) = default;
};

Partition conjugate(const Partition& p);
FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& fc);

// Frobenius rank after deleting the first c rows (c >= 0) or first -c columns
// (c < 0).
int shifted_rank(const Partition& p, int c);

// hook_lengths(p)[i][j] = arm + leg + 1 of cell (i, j), 0-indexed.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

bool is_t_core(const Partition& p, int t);

// lambda is z-asymmetric when frobenius(lambda) = (u+z | u); negative z is
// handled through conjugation.
bool is_z_asymmetric(const Partition& p, int z);
// All z-asymmetric partitions of size <= max_size, ordered by size then lex.
std::vector<Partition> enumerate_z_asymmetric(int z, int max_size);

// If the skew shape is a ribbon (edge-connected, no 2x2 block): its cell count
// and height (rows occupied minus one).
struct RibbonInfo {
    int size = 0;
    int height = 0;
    friend bool operator==(const RibbonInfo&, const RibbonInfo&) = default;
};
std::optional<RibbonInfo> ribbon_info(const SkewShape& shape);

// Enumeration helpers used by tests and verification sweeps.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_size);
std::vector<Partition> subpartitions(const Partition& outer);

struct PartitionHash {
    size_t operator()(const Partition& p) const
    {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace charfact

#endif
