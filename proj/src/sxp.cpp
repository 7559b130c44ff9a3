#include "charfact/sxp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "charfact/degree_guard.hpp"

namespace charfact {

namespace {

int floor_mod(int m, int t)
{
    int r = m % t;
    return r < 0 ? r + t : r;
}

long long as_integer(const QPoly& c, const char* where)
{
    if (c.degree() > 0 || !is_integer(c.coeff(0)))
        throw std::logic_error(std::string(where) + ": expected an integer");
    return static_cast<long long>(c.coeff(0).get_num().get_si());
}

SymFunc truncated(const SymFunc& f, int max_deg)
{
    SymFunc out(f.basis());
    for (const auto& [part, coef] : f.terms())
        if (part.size() <= max_deg)
            out.add_term(part, coef);
    return out;
}

}  // namespace

std::vector<SXPTerm> sxp_schur(const Partition& lambda, int t)
{
    if (t < 2)
        throw std::invalid_argument("sxp_schur: t must be at least 2");
    std::vector<SXPTerm> out;
    for (const auto& nu : partitions_of(t * lambda.size())) {
        CoreQuotient cq = core_quotient(nu, t);
        if (!cq.core.empty())
            continue;
        std::vector<SkewShape> factors;
        for (const auto& q : cq.quotient)
            factors.push_back({q, Partition()});
        long long c = lr_coeff(lambda, factors);
        if (c == 0)
            continue;
        out.push_back({nu, sgn_t({nu, Partition()}, t), c});
    }
    return out;
}

std::map<Partition, long long> sxp_wildon(const Partition& tau, const SkewShape& shape, int t)
{
    if (t < 2)
        throw std::invalid_argument("sxp_wildon: t must be at least 2");
    std::map<Partition, long long> out;
    if (!shape.valid())
        return out;
    int n = tau.size() + t * shape.size();
    CoreQuotient tq = core_quotient(tau, t);
    for (const auto& nu : partitions_of(n)) {
        if (!nu.contains(tau))
            continue;
        if (!is_t_tileable({nu, tau}, t))
            continue;
        CoreQuotient nq = core_quotient(nu, t);
        std::vector<SkewShape> factors;
        for (int r = 0; r < t; ++r)
            factors.push_back({nq.quotient[r], tq.quotient[r]});
        factors.push_back({shape.inner, Partition()});
        long long c = lr_coeff(shape.outer, factors);
        if (c == 0)
            continue;
        out[nu] = sgn_t({nu, tau}, t) * c;
    }
    return out;
}

bool littlewood_mult_check(const Partition& lambda, const Partition& mu, int t)
{
    if (lambda.size() != t * mu.size())
        throw std::invalid_argument("littlewood_mult_check: |lambda| != t|mu|");
    long long lhs = chi(lambda, mu.stretch(t));
    CoreQuotient cq = core_quotient(lambda, t);
    if (!cq.core.empty())
        return lhs == 0;
    // Induced character value at mu through the characteristic map: z_mu times
    // the p_mu-coefficient of the product of the quotient Schur functions.
    SymFunc prod = SymFunc::constant(QPoly::one());
    for (const auto& q : cq.quotient)
        prod = mul(prod, to_basis(generator(Basis::s, q), Basis::p));
    QPoly coeff = prod.coeff(mu);
    Rat ind = coeff.coeff(0) * Rat(z_factor(mu));
    if (coeff.degree() > 0 || !is_integer(ind))
        throw std::logic_error("littlewood_mult_check: non-integer induced value");
    long long rhs = sgn_t({lambda, Partition()}, t) *
                    static_cast<long long>(ind.get_num().get_si());
    return lhs == rhs;
}

bool farahat_check(const SkewShape& shape, const Partition& rho, int t)
{
    if (shape.size() != t * rho.size())
        throw std::invalid_argument("farahat_check: |shape| != t|rho|");
    long long lhs = chi_skew(shape, rho.stretch(t));
    if (!is_t_tileable(shape, t))
        return lhs == 0;
    CoreQuotient a = core_quotient(shape.outer, t);
    CoreQuotient b = core_quotient(shape.inner, t);
    SymFunc prod = SymFunc::constant(QPoly::one());
    for (int r = 0; r < t; ++r)
        prod = mul(prod, skew_schur_p({a.quotient[r], b.quotient[r]}));
    Rat ind = prod.coeff(rho).coeff(0) * Rat(z_factor(rho));
    if (!is_integer(ind))
        throw std::logic_error("farahat_check: non-integer induced value");
    long long rhs = sgn_t(shape, t) * static_cast<long long>(ind.get_num().get_si());
    return lhs == rhs;
}

std::map<Partition, long long> a_coeff_table(const Partition& lambda, CharFamily family, int t)
{
    SymFunc f = plethysm_pt(to_basis(universal_char(family, lambda), Basis::p), t);
    std::map<Partition, long long> out;
    while (!f.is_zero()) {
        int d = f.max_degree();
        SymFunc top(Basis::p);
        for (const auto& [part, coef] : f.terms())
            if (part.size() == d)
                top.add_term(part, coef);
        SymFunc tops = to_basis(top, Basis::s);
        if (tops.is_zero())
            throw std::logic_error("a_coeff_table: top component vanished unexpectedly");
        for (const auto& [nu, coef] : tops.terms()) {
            long long c = as_integer(coef, "a_coeff_table");
            if (c == 0)
                continue;
            out[nu] += c;
            f -= to_basis(universal_char(family, nu), Basis::p).scaled(QPoly(rat_from(c)));
        }
    }
    return out;
}

std::map<Partition, long long> a_coeff_lemma_table(const Partition& lambda, CharFamily family,
                                                   int t)
{
    if (family == CharFamily::so_minus)
        throw std::invalid_argument("a_coeff_lemma_table: family must be sp, o or so+");
    int inner_z = family == CharFamily::sp ? -1 : family == CharFamily::o ? 1 : 0;
    std::map<Partition, long long> out;
    for (const auto& mu : enumerate_z_asymmetric(inner_z, lambda.size())) {
        if (!lambda.contains(mu))
            continue;
        int num = family == CharFamily::so_plus ? mu.size() - mu.frobenius_rank() : mu.size();
        if (num % 2 != 0)
            throw std::logic_error("a_coeff_lemma_table: odd sign exponent");
        long long mu_sign = (num / 2) % 2 == 0 ? 1 : -1;
        int xi_size = t * (lambda.size() - mu.size());
        for (const auto& xi : partitions_of(xi_size)) {
            CoreQuotient cq = core_quotient(xi, t);
            if (!cq.core.empty())
                continue;
            std::vector<SkewShape> factors;
            for (const auto& q : cq.quotient)
                factors.push_back({q, Partition()});
            factors.push_back({mu, Partition()});
            long long c_outer = lr_coeff(lambda, factors);
            if (c_outer == 0)
                continue;
            long long weight = mu_sign * sgn_t({xi, Partition()}, t) * c_outer;
            for (const auto& eta : subpartitions(xi)) {
                bool keep = true;
                long long eta_sign = 1;
                switch (family) {
                    case CharFamily::o:
                        for (int part : eta.parts())
                            if (part % 2 != 0)
                                keep = false;
                        break;
                    case CharFamily::sp: {
                        Partition conj = eta.conjugate();
                        for (int part : conj.parts())
                            if (part % 2 != 0)
                                keep = false;
                        break;
                    }
                    case CharFamily::so_plus:
                        eta_sign = eta.size() % 2 == 0 ? 1 : -1;
                        break;
                    default: break;
                }
                if (!keep)
                    continue;
                SymFunc skew = skew_schur({xi, eta});
                for (const auto& [nu, coef] : skew.terms()) {
                    long long c = as_integer(coef, "a_coeff_lemma_table");
                    if (c != 0)
                        out[nu] += weight * eta_sign * c;
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

long long a_coeff(const Partition& lambda, const Partition& nu, CharFamily family, int t)
{
    auto path2 = a_coeff_table(lambda, family, t);
    auto path1 = a_coeff_lemma_table(lambda, family, t);
    for (auto it = path2.begin(); it != path2.end();)
        it = it->second == 0 ? path2.erase(it) : std::next(it);
    if (path1 != path2)
        throw std::logic_error("a_coeff: closed-form and plethysm routes disagree for lambda=" +
                               lambda.to_string() + ", t=" + std::to_string(t));
    auto it = path2.find(nu);
    return it == path2.end() ? 0 : it->second;
}

namespace {

// Sum of all s_eta -> p up to the degree bound.
SymFunc schur_sum(int max_deg, bool squared)
{
    SymFunc out = SymFunc::constant(QPoly::one());
    int bound = squared ? max_deg / 2 : max_deg;
    for (int d = 1; d <= bound; ++d) {
        for (const auto& eta : partitions_of(d)) {
            SymFunc sp = to_basis(generator(Basis::s, eta), Basis::p);
            out += squared ? mul(sp, sp) : sp;
        }
    }
    return out;
}

}  // namespace

long long b_coeff(const Partition& lambda, const Partition& mu, int t)
{
    if (t < 2)
        throw std::invalid_argument("b_coeff: t must be at least 2");
    CoreQuotient cq = core_quotient(mu, t);
    if (!cq.core.empty())
        return 0;
    int budget = lambda.size();
    SymFunc acc = SymFunc::constant(QPoly::one());
    for (const auto& q : cq.quotient)
        acc = truncated(mul(acc, to_basis(generator(Basis::s, q), Basis::p)), budget);
    if (acc.is_zero())
        return 0;
    int singles = t / 2;  // independent eta factors
    SymFunc g1 = schur_sum(budget, false);
    for (int i = 0; i < singles; ++i)
        acc = truncated(mul(acc, g1), budget);
    if (t % 2 == 1)
        acc = truncated(mul(acc, schur_sum(budget, true)), budget);
    return as_integer(hall(acc, generator(Basis::s, lambda)), "b_coeff");
}

bool universal_sxp_check(const Partition& lambda, int t)
{
    SymFunc lhs = plethysm_pt(to_basis(universal_char(CharFamily::so_plus, lambda), Basis::p), t);
    SymFunc rhs(Basis::p);
    for (int d = 0; d <= t * lambda.size(); d += t) {
        for (const auto& mu : partitions_of(d)) {
            if (!t_core(mu, t).empty())
                continue;
            long long b = b_coeff(lambda, mu, t);
            if (b == 0)
                continue;
            long long s = sgn_t({mu, Partition()}, t);
            rhs += to_basis(universal_char(CharFamily::so_plus, mu), Basis::p)
                       .scaled(QPoly(rat_from(s * b)));
        }
    }
    return lhs == rhs;
}

std::string ConstructionSO::group_descriptor() const
{
    std::ostringstream os;
    for (size_t i = 0; i < gl_sizes.size(); ++i) {
        if (i)
            os << " x ";
        os << "GL" << gl_sizes[i];
    }
    if (so_size) {
        if (!gl_sizes.empty())
            os << " x ";
        os << "SO" << *so_size;
    }
    return os.str();
}

ConstructionSO construction_so(const Partition& lambda, int n, int t)
{
    if (t < 2)
        throw std::invalid_argument("construction_so: t must be at least 2");
    if (lambda.length() > n)
        throw std::invalid_argument("construction_so: l(lambda) > n");
    int a = n / t, b = n % t;
    CoreQuotient cq = core_quotient(lambda, t);
    ConstructionSO out;
    for (int r = 0; r <= (t - 2) / 2; ++r) {
        int i1 = floor_mod(-r - b - 1, t);
        int i2 = floor_mod(r - b, t);
        int d = (i1 >= t - b ? 1 : 0) + (i2 >= t - b ? 1 : 0);
        int m = 2 * a + d;
        const Partition& first = cq.quotient[i1];
        const Partition& second = cq.quotient[i2];
        if (first.length() > m || second.length() > m)
            throw std::invalid_argument("construction_so: window too small for the quotient");
        std::vector<int> weight(m);
        for (int i = 1; i <= m; ++i)
            weight[i - 1] = first.part(i - 1) - second.part(m - i) + cq.kappa[i2];
        out.gammas.push_back(std::move(weight));
        out.gl_sizes.push_back(m);
    }
    if (t % 2 == 1) {
        int im = floor_mod((t - 1) / 2 - b, t);
        int d = im >= t - b ? 1 : 0;
        const Partition& mid = cq.quotient[im];
        if (mid.length() > a + d)
            throw std::logic_error("construction_so: middle quotient entry too long");
        out.gammas.push_back(mid.parts());
        out.so_size = 2 * (a + d) + 1;
    }
    return out;
}

}  // namespace charfact
