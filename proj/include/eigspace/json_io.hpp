#pragma once

// JSON encodings: rationals as "p/q" strings, matrices as
// {"rows","cols","entries"} and subspaces as {"n","basis"}.

#include <eigspace/degeneration.hpp>
#include <eigspace/identities.hpp>
#include <eigspace/matrix.hpp>
#include <eigspace/poly.hpp>
#include <eigspace/spectral.hpp>
#include <eigspace/subspace.hpp>

#include <json.hpp>

#include <string>

namespace eigspace {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QMatrix& m);
Json to_json(const MatrixSubspace& v);
/// Coefficients lowest degree first.
Json to_json(const UniPoly& p);
Json to_json(const SpectralProfile& s);
Json to_json(const Config& c);
Json to_json(const TwoZerosInstance& inst);
Json to_json(const DiscriminantInstance& inst);
Json to_json(const IdentityReport& rep);
Json to_json(const std::vector<WeightComponent>& comps);

/// All parsers throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);
MatrixSubspace subspace_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace eigspace
