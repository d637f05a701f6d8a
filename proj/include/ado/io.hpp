#pragma once

#include <string>

#include <json.hpp>

#include "ado/affine.hpp"
#include "ado/catalog.hpp"
#include "ado/mu.hpp"

namespace ado::io {

using json = nlohmann::ordered_json;

// Documents use one-based basis indices and carry every scalar as a string
// in the Scalar grammar. Readers throw ParseError on malformed input.

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, int n);
/// Row-major list of rows.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, int rows, int cols);

json params_to_json(const Params& p);
Params params_from_json(const json& j);

json to_json(const LieAlgebra& g, const Params& params = {});
LieAlgebra algebra_from_json(const json& j, JacobiPolicy policy = JacobiPolicy::Enforce);

json to_json(const Representation& rho);
Representation representation_from_json(const json& j);

json to_json(const LeftSymmetricAlgebra& a);
LeftSymmetricAlgebra lsa_from_json(const json& j);

json to_json(const AffineRep& phi);
AffineRep affine_from_json(const json& j);

json to_json(const SearchReport& report);
json to_json(const MuCertificate& cert);

/// Parses text and reports syntax errors as ParseError.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace ado::io
