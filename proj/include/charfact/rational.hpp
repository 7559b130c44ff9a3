#ifndef CHARFACT_RATIONAL_HPP
#define CHARFACT_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace charfact {

// Exact rational scalar used throughout. GMP keeps every computation exact;
// nothing in this library ever touches floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long constructors; parts and character values fit in long.
inline Int int_from(long long v)
{
    return Int(static_cast<long>(v));
}

inline Rat rat_from(long long v)
{
    return Rat(static_cast<long>(v));
}

// Renders "p/q", or just "p" when the denominator is one.
inline std::string rat_to_string(const Rat& r)
{
    return r.get_str();
}

inline bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

}  // namespace charfact

#endif
