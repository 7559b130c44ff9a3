#ifndef CHARFACT_DEGREE_GUARD_HPP
#define CHARFACT_DEGREE_GUARD_HPP

#include <stdexcept>
#include <string>

namespace charfact {

// Character-table work grows like n!, so requests past the configured degree
// bound fail loudly instead of thrashing. Default bound: 14.
class DegreeCapError : public std::runtime_error {
public:
    explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};

int degree_cap();
void set_degree_cap(int cap);
void require_degree(int n);

// Scoped override used by sweeps that legitimately need a higher bound.
class ScopedDegreeCap {
public:
    explicit ScopedDegreeCap(int cap) : saved_(degree_cap()) { set_degree_cap(cap); }
    ~ScopedDegreeCap() { set_degree_cap(saved_); }
    ScopedDegreeCap(const ScopedDegreeCap&) = delete;
    ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

private:
    int saved_;
};

}  // namespace charfact

#endif
