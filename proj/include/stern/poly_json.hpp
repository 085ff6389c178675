#pragma once

#include "json.hpp"
#include "stern/stern_poly.hpp"

namespace stern {

// JSON form: {"base": b, "terms": [{"coeff": c, "exps": [[[tpower, coeff], ...] x b]}]}
// with exps sorted by ascending t-power and terms sorted by canonical key.
nlohmann::json poly_to_json(const SternPoly& p);

}  // namespace stern
