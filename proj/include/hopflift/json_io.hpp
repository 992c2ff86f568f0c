#pragma once

// JSON forms of the exact data types. Scalars are DSL strings such as
// "1/2-1/2*x"; matrices are arrays of rows.

#include <json.hpp>

#include "hopflift/catalog.hpp"
#include "hopflift/finhopf.hpp"
#include "hopflift/ydmod.hpp"

namespace hopflift::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Mat& m);
/// Accepts an array of rows, or a bare scalar (1 x 1).
Mat matrix_from_json(const Json& j);

/// Basis names and sparse structure tensors.
Json to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

/// Generator matrices of a, b, c, d and the coaction matrix.
Json to_json(const YDModule& m);
YDModule yd_from_json(const Json& j, std::shared_ptr<const HopfData> parent);

/// {"lambda": [[...]], "mu": "1/2", ...}
Json to_json(const catalog::ParamSet& p);
catalog::ParamSet params_from_json(const Json& j);

/// {"tau": 17, "a": [[...]], "beta": "2"}
Json to_json(const catalog::IsoWitness& w);
catalog::IsoWitness witness_from_json(const Json& j);

}  // namespace hopflift::io
