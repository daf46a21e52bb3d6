#pragma once

#include <json.hpp>

#include "i1/b1.hpp"
#include "i1/endo.hpp"
#include "i1/fmatrix.hpp"
#include "i1/iop.hpp"
#include "i1/polyx.hpp"

namespace i1 {

// All serialization goes through ordered_json with keys inserted in
// canonical order (numeric ascending), so identical values always dump to
// identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);                 // "p/q", "/q" dropped when q = 1
Json to_json(const HPoly& p);                  // ["c0","c1",...]
Json to_json(const PolyX& p);                  // {"<s>": "p/q"} ascending
Json to_json(const FMatrix& f);                // [[i,j,"p/q"],...] lex by (i,j)
Json to_json(const IOp& a);                    // {"towers": {...}, "f": [...]}
Json to_json(const B1Elem& b);                 // {"<k>": ["c0",...]} ascending
Json to_json(const AutDecomposition& d);

Scalar scalar_from_json(const Json& j);
HPoly hpoly_from_json(const Json& j);
PolyX polyx_from_json(const Json& j);
FMatrix fmatrix_from_json(const Json& j);
IOp iop_from_json(const Json& j);
B1Elem b1_from_json(const Json& j);

/// Reads {"H": IOp, "int": IOp, "der": IOp} and validates the relations.
Endo endo_from_json(const Json& j);

}  // namespace i1
