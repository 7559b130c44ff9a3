#include "charfact/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace charfact {

QPoly::QPoly(const Rat& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::monomial(const Rat& c, int power)
{
    if (power < 0)
        throw std::domain_error("QPoly::monomial: negative power");
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = c;
    }
    return p;
}

bool QPoly::is_one() const
{
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const Rat& QPoly::coeff(int k) const
{
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return zero;
    return coeffs_[k];
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly p(*this);
    for (auto& c : p.coeffs_)
        c = -c;
    return p;
}

bool operator<(const QPoly& a, const QPoly& b)
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size();
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("QPoly::divide_exact: division by zero");
    QPoly rem(*this);
    std::vector<Rat> quot;
    int dd = divisor.degree();
    const Rat& lead = divisor.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rat c = rem.coeffs_.back() / lead;
        if (static_cast<int>(quot.size()) < k + 1)
            quot.resize(k + 1, Rat(0));
        quot[k] = c;
        rem -= monomial(c, k) * divisor;
    }
    if (!rem.is_zero())
        throw std::domain_error("QPoly::divide_exact: nonzero remainder");
    return QPoly(std::move(quot));
}

QPoly QPoly::pow(int e) const
{
    if (e < 0)
        throw std::domain_error("QPoly::pow: negative exponent");
    QPoly acc = one();
    QPoly base(*this);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat QPoly::eval(const Rat& value) const
{
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

QPoly QPoly::scale_variable(const Rat& c) const
{
    QPoly p(*this);
    Rat f(1);
    for (size_t i = 1; i < p.coeffs_.size(); ++i) {
        f *= c;
        p.coeffs_[i] *= f;
    }
    p.trim();
    return p;
}

bool QPoly::all_integer() const
{
    for (const auto& c : coeffs_)
        if (!is_integer(c))
            return false;
    return true;
}

bool QPoly::is_monomial() const
{
    int nonzero = 0;
    for (const auto& c : coeffs_)
        if (c != 0)
            ++nonzero;
    return nonzero <= 1;
}

std::string QPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0)
            continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rat_to_string(abs);
        } else {
            if (abs != 1)
                os << rat_to_string(abs) << "*";
            os << "q";
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace charfact
