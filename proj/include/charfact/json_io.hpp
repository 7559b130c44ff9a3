#ifndef CHARFACT_JSON_IO_HPP
#define CHARFACT_JSON_IO_HPP

#include <json.hpp>

#include "charfact/littlewood.hpp"
#include "charfact/partition.hpp"
#include "charfact/symfunc.hpp"
#include "charfact/univchar.hpp"

namespace charfact {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const QPoly& c);  // [[power, "rational"], ...] ascending
Json to_json(const CoreQuotient& cq);
Json to_json(const SymFunc& f);
Json to_json(const ZAsymWitness& w);
Json to_json(const FactorizationResult& r);

}  // namespace charfact

#endif
