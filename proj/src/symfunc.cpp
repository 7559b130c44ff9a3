#include "charfact/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "charfact/characters.hpp"
#include "charfact/degree_guard.hpp"
#include "charfact/littlewood.hpp"

namespace charfact {

char basis_letter(Basis b)
{
    switch (b) {
        case Basis::p: return 'p';
        case Basis::h: return 'h';
        case Basis::e: return 'e';
        case Basis::m: return 'm';
        case Basis::s: return 's';
    }
    return '?';
}

Basis basis_from_letter(char c)
{
    switch (c) {
        case 'p': return Basis::p;
        case 'h': return Basis::h;
        case 'e': return Basis::e;
        case 'm': return Basis::m;
        case 's': return Basis::s;
    }
    throw std::invalid_argument(std::string("unknown basis '") + c + "'");
}

SymFunc SymFunc::constant(const QPoly& c, Basis b)
{
    SymFunc f(b);
    f.add_term(Partition(), c);
    return f;
}

int SymFunc::max_degree() const
{
    int d = -1;
    for (const auto& [part, coef] : terms_)
        d = std::max(d, part.size());
    return d;
}

QPoly SymFunc::coeff(const Partition& index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? QPoly() : it->second;
}

void SymFunc::set_coeff(const Partition& index, QPoly c)
{
    if (c.is_zero())
        terms_.erase(index);
    else
        terms_[index] = std::move(c);
}

void SymFunc::add_term(const Partition& index, const QPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    if (basis_ != o.basis_)
        throw std::invalid_argument("SymFunc::operator+=: basis mismatch");
    for (const auto& [part, coef] : o.terms_)
        add_term(part, coef);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    if (basis_ != o.basis_)
        throw std::invalid_argument("SymFunc::operator-=: basis mismatch");
    for (const auto& [part, coef] : o.terms_)
        add_term(part, -coef);
    return *this;
}

SymFunc SymFunc::operator-() const
{
    SymFunc f(basis_);
    for (const auto& [part, coef] : terms_)
        f.terms_[part] = -coef;
    return f;
}

SymFunc SymFunc::scaled(const QPoly& c) const
{
    SymFunc f(basis_);
    if (c.is_zero())
        return f;
    for (const auto& [part, coef] : terms_)
        f.terms_[part] = coef * c;
    return f;
}

bool operator==(const SymFunc& a, const SymFunc& b)
{
    if (a.basis_ == b.basis_)
        return a.terms_ == b.terms_;
    return to_basis(a, Basis::p) == to_basis(b, Basis::p);
}

SymFunc SymFunc::eval_q(const Rat& value) const
{
    SymFunc f(basis_);
    for (const auto& [part, coef] : terms_)
        f.add_term(part, QPoly(coef.eval(value)));
    return f;
}

std::vector<std::pair<Partition, QPoly>> SymFunc::sorted_terms() const
{
    std::vector<std::pair<Partition, QPoly>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

std::string SymFunc::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [part, coef] : sorted_terms()) {
        std::string cs = coef.to_string();
        bool negated = false;
        if (coef.is_monomial() && cs.size() > 0 && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated)
                os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        std::string index = std::string(1, basis_letter(basis_)) + "[" +
                            (part.empty() ? "" : part.to_string()) + "]";
        if (!coef.is_monomial())
            os << "(" << coef.to_string() << ")*" << index;
        else if (cs == "1")
            os << index;
        else
            os << cs << "*" << index;
    }
    return os.str();
}

SymFunc generator(Basis b, const Partition& index)
{
    SymFunc f(b);
    f.add_term(index, QPoly::one());
    return f;
}

// ---------------------------------------------------------------------------
// Conversions through the p-basis hub.

namespace {

std::mutex g_conv_mutex;

const SymFunc& h_to_p(int k)
{
    static std::unordered_map<int, SymFunc> memo;
    std::lock_guard<std::mutex> lock(g_conv_mutex);
    auto it = memo.find(k);
    if (it != memo.end())
        return it->second;
    SymFunc f(Basis::p);
    for (const auto& mu : partitions_of(k))
        f.add_term(mu, QPoly(Rat(1) / Rat(z_factor(mu))));
    return memo.emplace(k, std::move(f)).first->second;
}

const SymFunc& e_to_p(int k)
{
    static std::unordered_map<int, SymFunc> memo;
    std::lock_guard<std::mutex> lock(g_conv_mutex);
    auto it = memo.find(k);
    if (it != memo.end())
        return it->second;
    SymFunc f(Basis::p);
    for (const auto& mu : partitions_of(k)) {
        int sign = (k - mu.length()) % 2 == 0 ? 1 : -1;
        f.add_term(mu, QPoly(Rat(sign) / Rat(z_factor(mu))));
    }
    return memo.emplace(k, std::move(f)).first->second;
}

SymFunc mul_p(const SymFunc& a, const SymFunc& b)
{
    SymFunc out(a.basis());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms())
            out.add_term(pa.merge(pb), ca * cb);
    return out;
}

SymFunc s_to_p(const Partition& lambda)
{
    static std::map<Partition, SymFunc> memo;
    {
        std::lock_guard<std::mutex> lock(g_conv_mutex);
        auto it = memo.find(lambda);
        if (it != memo.end())
            return it->second;
    }
    require_degree(lambda.size());
    SymFunc f(Basis::p);
    for (const auto& rho : partitions_of(lambda.size()))
        f.add_term(rho, QPoly(Rat(int_from(chi(lambda, rho))) / Rat(z_factor(rho))));
    std::lock_guard<std::mutex> lock(g_conv_mutex);
    return memo.emplace(lambda, std::move(f)).first->second;
}

// Coefficient of the monomial x^nu in p_mu, i.e. the number of ways to
// assign the parts of mu to the rows of nu so that row sums match.
long long monomial_coeff_in_p(const Partition& mu, const Partition& nu)
{
    std::map<std::vector<int>, long long> state;  // remaining capacities, sorted
    std::vector<int> init(nu.parts());
    std::sort(init.begin(), init.end());
    state[init] = 1;
    for (int part : mu.parts()) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [caps, ways] : state) {
            for (size_t i = 0; i < caps.size(); ++i) {
                if (caps[i] < part)
                    continue;
                std::vector<int> reduced(caps);
                reduced[i] -= part;
                std::sort(reduced.begin(), reduced.end());
                next[reduced] += ways;
            }
        }
        state = std::move(next);
    }
    std::vector<int> zero(nu.length(), 0);
    auto it = state.find(zero);
    return it == state.end() ? 0 : it->second;
}

// m_nu expressed in the p-basis: per-degree inversion of the unitriangular
// transition p_mu = sum_nu R[mu][nu] m_nu.
const std::map<Partition, SymFunc>& m_to_p_table(int n)
{
    static std::unordered_map<int, std::map<Partition, SymFunc>> memo;
    std::lock_guard<std::mutex> lock(g_conv_mutex);
    auto hit = memo.find(n);
    if (hit != memo.end())
        return hit->second;

    require_degree(n);
    auto parts = partitions_of(n);
    int N = static_cast<int>(parts.size());
    // R[i][j] = coeff of m_{parts[j]} in p_{parts[i]}
    std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            A[i][j] = rat_from(monomial_coeff_in_p(parts[i], parts[j]));
    // Invert by Gauss-Jordan.
    std::vector<std::vector<Rat>> inv(N, std::vector<Rat>(N, Rat(0)));
    for (int i = 0; i < N; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        for (int row = col; row < N; ++row)
            if (A[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::logic_error("m_to_p_table: singular transition matrix");
        std::swap(A[col], A[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat d = A[col][col];
        for (int j = 0; j < N; ++j) {
            A[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int row = 0; row < N; ++row) {
            if (row == col || A[row][col] == 0)
                continue;
            Rat f = A[row][col];
            for (int j = 0; j < N; ++j) {
                A[row][j] -= f * A[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    // m = R^{-1} p, reading the inverse of the transpose relation:
    // m_{parts[j]} = sum_i inv_of_R^T ... we have p_i = sum_j R[i][j] m_j, so
    // m_j = sum_i (R^{-1})[j][i] ... careful: (R^{-1} R = I) gives
    // sum_k (R^{-1})[j][k] p_k = sum_k (R^{-1})[j][k] sum_l R[k][l] m_l = m_j.
    std::map<Partition, SymFunc> table;
    for (int j = 0; j < N; ++j) {
        SymFunc f(Basis::p);
        for (int k = 0; k < N; ++k)
            f.add_term(parts[k], QPoly(inv[j][k]));
        table[parts[j]] = std::move(f);
    }
    return memo.emplace(n, std::move(table)).first->second;
}

SymFunc convert_to_p(const SymFunc& f)
{
    if (f.basis() == Basis::p)
        return f;
    SymFunc out(Basis::p);
    for (const auto& [part, coef] : f.terms()) {
        SymFunc contrib = SymFunc::constant(QPoly::one());
        switch (f.basis()) {
            case Basis::h:
                for (int k : part.parts())
                    contrib = mul_p(contrib, h_to_p(k));
                break;
            case Basis::e:
                for (int k : part.parts())
                    contrib = mul_p(contrib, e_to_p(k));
                break;
            case Basis::s:
                contrib = s_to_p(part);
                break;
            case Basis::m:
                contrib = m_to_p_table(part.size()).at(part);
                break;
            case Basis::p:
                break;
        }
        out += contrib.scaled(coef);
    }
    return out;
}

QPoly hall_pp(const SymFunc& fp, const SymFunc& gp)
{
    QPoly acc;
    for (const auto& [part, cf] : fp.terms()) {
        auto it = gp.terms().find(part);
        if (it != gp.terms().end())
            acc += cf * it->second * QPoly(Rat(z_factor(part)));
    }
    return acc;
}

std::vector<int> degrees_of(const SymFunc& f)
{
    std::vector<int> ds;
    for (const auto& [part, coef] : f.terms())
        ds.push_back(part.size());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target)
{
    if (f.basis() == target)
        return f;
    SymFunc fp = convert_to_p(f);
    if (target == Basis::p)
        return fp;
    SymFunc out(target);
    switch (target) {
        case Basis::s: {
            for (int d : degrees_of(fp)) {
                require_degree(d);
                for (const auto& nu : partitions_of(d)) {
                    QPoly c;
                    for (const auto& rho : partitions_of(d)) {
                        auto it = fp.terms().find(rho);
                        if (it != fp.terms().end())
                            c += it->second * QPoly(Rat(int_from(chi(nu, rho))));
                    }
                    out.add_term(nu, c);
                }
            }
            break;
        }
        case Basis::m: {
            // f = sum_mu <f, h_mu> m_mu
            for (int d : degrees_of(fp)) {
                for (const auto& mu : partitions_of(d)) {
                    SymFunc hmu(Basis::h);
                    hmu.add_term(mu, QPoly::one());
                    out.add_term(mu, hall_pp(fp, convert_to_p(hmu)));
                }
            }
            break;
        }
        case Basis::h: {
            // coefficient of h_mu is <f, m_mu>
            for (int d : degrees_of(fp)) {
                for (const auto& mu : partitions_of(d)) {
                    const SymFunc& mmu = m_to_p_table(d).at(mu);
                    out.add_term(mu, hall_pp(fp, mmu));
                }
            }
            break;
        }
        case Basis::e: {
            SymFunc h = to_basis(omega(fp), Basis::h);
            for (const auto& [part, coef] : h.terms())
                out.add_term(part, coef);
            break;
        }
        case Basis::p:
            break;
    }
    return out;
}

SymFunc mul(const SymFunc& f, const SymFunc& g)
{
    bool multiplicative = f.basis() == g.basis() &&
                          (f.basis() == Basis::p || f.basis() == Basis::h ||
                           f.basis() == Basis::e);
    if (multiplicative)
        return mul_p(f, g);
    return mul_p(convert_to_p(f), convert_to_p(g));
}

QPoly hall(const SymFunc& f, const SymFunc& g)
{
    return hall_pp(convert_to_p(f), convert_to_p(g));
}

SymFunc omega(const SymFunc& f)
{
    switch (f.basis()) {
        case Basis::p: {
            SymFunc out(Basis::p);
            for (const auto& [part, coef] : f.terms()) {
                int sign = (part.size() - part.length()) % 2 == 0 ? 1 : -1;
                out.add_term(part, sign > 0 ? coef : -coef);
            }
            return out;
        }
        case Basis::h: {
            SymFunc out(Basis::e);
            for (const auto& [part, coef] : f.terms())
                out.add_term(part, coef);
            return out;
        }
        case Basis::e: {
            SymFunc out(Basis::h);
            for (const auto& [part, coef] : f.terms())
                out.add_term(part, coef);
            return out;
        }
        case Basis::s: {
            SymFunc out(Basis::s);
            for (const auto& [part, coef] : f.terms())
                out.add_term(part.conjugate(), coef);
            return out;
        }
        case Basis::m:
            return to_basis(omega(to_basis(f, Basis::p)), Basis::m);
    }
    return f;
}

SymFunc plethysm_pt(const SymFunc& f, int t)
{
    if (t < 1)
        throw std::invalid_argument("plethysm_pt: t must be positive");
    SymFunc fp = to_basis(f, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [part, coef] : fp.terms())
        out.add_term(part.stretch(t), coef);
    return out;
}

SymFunc verschiebung(const SymFunc& f, int t)
{
    if (t < 2)
        throw std::invalid_argument("verschiebung: t must be at least 2");
    SymFunc fp = to_basis(f, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [part, coef] : fp.terms()) {
        auto shrunk = part.shrink(t);
        if (!shrunk)
            continue;
        Rat w = 1;
        for (int i = 0; i < part.length(); ++i)
            w *= t;
        out.add_term(*shrunk, coef * QPoly(w));
    }
    return out;
}

SymFunc skew_schur_p(const SkewShape& shape)
{
    SymFunc out(Basis::p);
    if (!shape.valid())
        return out;
    int n = shape.size();
    require_degree(n);
    for (const auto& rho : partitions_of(n)) {
        long long v = chi_skew(shape, rho);
        if (v != 0)
            out.add_term(rho, QPoly(Rat(int_from(v)) / Rat(z_factor(rho))));
    }
    return out;
}

SymFunc skew_schur(const SkewShape& shape)
{
    if (!shape.valid())
        return SymFunc::zero(Basis::s);
    if (shape.inner.empty())
        return generator(Basis::s, shape.outer);
    return to_basis(skew_schur_p(shape), Basis::s);
}

SymFunc verschiebung_schur(const SkewShape& shape, int t)
{
    if (!shape.valid())
        throw std::invalid_argument("verschiebung_schur: inner not contained in outer");
    if (t < 2)
        throw std::invalid_argument("verschiebung_schur: t must be at least 2");
    if (!is_t_tileable(shape, t))
        return SymFunc::zero(Basis::p);
    CoreQuotient a = core_quotient(shape.outer, t);
    CoreQuotient b = core_quotient(shape.inner, t);
    SymFunc prod = SymFunc::constant(QPoly(Rat(sgn_t(shape, t))));
    for (int r = 0; r < t; ++r)
        prod = mul_p(prod, skew_schur_p({a.quotient[r], b.quotient[r]}));
    return prod;
}

SymFunc verschiebung_skew_direct(const SkewShape& shape, int t)
{
    if (t < 2)
        throw std::invalid_argument("verschiebung_skew_direct: t must be at least 2");
    SymFunc out(Basis::p);
    if (!shape.valid())
        return out;
    int n = shape.size();
    if (n % t != 0)
        return out;
    for (const auto& rho : partitions_of(n / t)) {
        long long v = chi_skew(shape, rho.stretch(t));
        if (v == 0)
            continue;
        Rat w = rat_from(v);
        for (int i = 0; i < rho.length(); ++i)
            w *= t;
        w /= Rat(z_factor(rho.stretch(t)));
        out.add_term(rho, QPoly(w));
    }
    return out;
}

long long lr_coeff(const Partition& lambda, const std::vector<SkewShape>& factors)
{
    int total = 0;
    for (const auto& s : factors) {
        if (!s.valid())
            return 0;
        total += s.size();
    }
    if (total != lambda.size())
        return 0;
    SymFunc prod = SymFunc::constant(QPoly::one());
    for (const auto& s : factors)
        prod = mul_p(prod, skew_schur_p(s));
    QPoly c = hall_pp(prod, s_to_p(lambda));
    if (c.degree() > 0)
        throw std::logic_error("lr_coeff: q-dependent pairing");
    Rat v = c.coeff(0);
    if (!is_integer(v) || v < 0)
        throw std::logic_error("lr_coeff: value is not a nonnegative integer");
    return static_cast<long long>(v.get_num().get_si());
}

SymFunc det_symfunc(const std::vector<std::vector<SymFunc>>& m)
{
    size_t n = m.size();
    if (n == 0)
        return SymFunc::constant(QPoly::one(), Basis::h);
    Basis b = m[0][0].basis();
    if (n > 62)
        throw std::invalid_argument("det_symfunc: matrix too large");
    // DP over rows; state = set of used columns with accumulated signed minor.
    std::unordered_map<uint64_t, SymFunc> states;
    states.emplace(0, SymFunc::constant(QPoly::one(), b));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw std::invalid_argument("det_symfunc: matrix not square");
        std::unordered_map<uint64_t, SymFunc> next;
        for (const auto& [mask, minor] : states) {
            for (size_t j = 0; j < n; ++j) {
                if (mask & (1ull << j))
                    continue;
                if (m[i][j].is_zero())
                    continue;
                // parity: columns already used that exceed j
                int above = __builtin_popcountll(mask >> (j + 1));
                SymFunc term = mul(minor, m[i][j]);
                if (above % 2 != 0)
                    term = -term;
                uint64_t nm = mask | (1ull << j);
                auto [it, inserted] = next.emplace(nm, term);
                if (!inserted)
                    it->second += term;
            }
        }
        states = std::move(next);
    }
    uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
    auto it = states.find(full);
    return it == states.end() ? SymFunc::zero(b) : it->second;
}

namespace {

SymFunc h_or_zero(Basis b, int k)
{
    if (k < 0)
        return SymFunc::zero(b);
    if (k == 0)
        return SymFunc::constant(QPoly::one(), b);
    return generator(b, Partition{k});
}

}  // namespace

SymFunc schur_jacobi_trudi_h(const SkewShape& shape)
{
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    int n = lam.length();
    if (n == 0)
        return SymFunc::constant(QPoly::one(), Basis::h);
    std::vector<std::vector<SymFunc>> mat(n, std::vector<SymFunc>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] = h_or_zero(Basis::h, lam.part(i - 1) - mu.part(j - 1) - i + j);
    return det_symfunc(mat);
}

SymFunc schur_jacobi_trudi_e(const SkewShape& shape)
{
    Partition lam = shape.outer.conjugate();
    Partition mu = shape.inner.conjugate();
    int n = lam.length();
    if (n == 0)
        return SymFunc::constant(QPoly::one(), Basis::e);
    std::vector<std::vector<SymFunc>> mat(n, std::vector<SymFunc>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] = h_or_zero(Basis::e, lam.part(i - 1) - mu.part(j - 1) - i + j);
    return det_symfunc(mat);
}

}  // namespace charfact
