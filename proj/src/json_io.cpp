#include "charfact/json_io.hpp"

namespace charfact {

Json to_json(const Partition& p)
{
    return Json(p.parts());
}

Json to_json(const QPoly& c)
{
    Json out = Json::array();
    for (int k = 0; k <= c.degree(); ++k)
        if (c.coeff(k) != 0)
            out.push_back(Json::array({k, rat_to_string(c.coeff(k))}));
    return out;
}

Json to_json(const CoreQuotient& cq)
{
    Json out;
    out["t"] = cq.t;
    out["core"] = to_json(cq.core);
    Json quot = Json::array();
    for (const auto& q : cq.quotient)
        quot.push_back(to_json(q));
    out["quotient"] = quot;
    out["kappa"] = cq.kappa;
    return out;
}

Json to_json(const SymFunc& f)
{
    Json out;
    out["basis"] = std::string(1, basis_letter(f.basis()));
    Json terms = Json::array();
    for (const auto& [part, coef] : f.sorted_terms()) {
        Json t;
        t["part"] = to_json(part);
        t["coef"] = to_json(coef);
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

Json to_json(const ZAsymWitness& w)
{
    Json out;
    out["z"] = w.z;
    out["t"] = w.t;
    out["a"] = w.a;
    out["b"] = w.b;
    out["conjugated"] = w.conjugated;
    out["kappa"] = w.kappa;
    Json nu = Json::object();
    for (const auto& [r, part] : w.nu)
        nu[std::to_string(r)] = to_json(part);
    out["nu"] = nu;
    Json xi = Json::object();
    for (const auto& [s, part] : w.xi)
        xi[std::to_string(s)] = to_json(part);
    out["xi"] = xi;
    return out;
}

Json to_json(const FactorizationResult& r)
{
    Json out;
    out["lambda"] = to_json(r.lambda);
    out["z"] = r.z;
    out["t"] = r.t;
    out["vanishes"] = r.vanishes;
    if (r.vanishes)
        return out;
    out["epsilon"] = r.epsilon.to_string();
    out["kappa"] = r.kappa;
    out["mu_c"] = to_json(r.mu_c);
    Json factors = Json::array();
    for (const auto& f : r.factors) {
        Json fj;
        fj["kind"] = f.kind == Factor::Kind::RS ? "RS" : "CHI";
        fj["label"] = f.label;
        if (f.kind == Factor::Kind::RS) {
            fj["parts"] = Json::array({to_json(f.first), to_json(f.second)});
            fj["shift"] = f.shift;
            fj["c"] = f.c;
        } else {
            fj["parts"] = Json::array({to_json(f.first)});
            fj["shift"] = f.shift;
        }
        factors.push_back(fj);
    }
    out["factors"] = factors;
    if (r.q_value)
        out["q"] = rat_to_string(*r.q_value);
    return out;
}

}  // namespace charfact
