#pragma once

#include <json.hpp>

#include "tamelab/bounds.hpp"
#include "tamelab/certify.hpp"
#include "tamelab/lie.hpp"

namespace tamelab::io {

using Json = nlohmann::ordered_json;

// Every *_from_json throws SchemaError on malformed input. Integer values may
// be JSON numbers or decimal strings; residues are reduced into range.

Json to_json(const PadicScalar& x);                 // {"p", "prec", "value"}
PadicScalar scalar_from_json(const Json& j);

/// {"p", "n_vars", "trunc", "coeffs": [[exps], "value"], ...}, graded-lex,
/// zero coefficients omitted.
Json to_json(const SeriesElement& x);
SeriesElement series_from_json(const Json& j);

/// {"ring": {"p", "prec"}, "m", "entries": ["v", ...]} row-major.
Json to_json(const ScalarMatrix& g);
ScalarMatrix matrix_from_json(const Json& j);
/// Same layout with ring {"p", "n_vars", "trunc"} and entries as coefficient lists.
Json to_json(const SeriesMatrix& g);
SeriesMatrix series_matrix_from_json(const Json& j);

/// {"dim", "field": "Q" | {"Qp": {"p", "prec"}}, "brackets": [[i, j, [c...]], ...]}
/// with 0-based i < j; rational coefficients as numbers or "n/d" strings.
Json to_json(const LieAlgebra& l);
LieAlgebra lie_from_json(const Json& j);

Json to_json(const GroupInertialCertificate& c);  // {"y", "x", "a", "k"}
GroupInertialCertificate certificate_from_json(const Json& j);
/// Certificate fields plus {"b", "alpha", "q_minus_1"}.
Json to_json(const LocalPlan& plan);

/// {"abs_discriminant", "r1", "r2", "prime_norms", "grh"}; missing optional
/// fields take their defaults.
SplittingBoundInput bound_input_from_json(const Json& j);
Json to_json(const SplittingBoundInput& in);
Json to_json(const SplittingBoundResult& r);
Json to_json(const GSResult& r);

/// {"order": "p^e", "dims", "uniform", "window"}.
Json pcentral_report(const FiniteQuotientGroup& g, const UniformityReport& u);

Json to_json(const SuiteReport& r);

std::string rational_string(const Rational& q);

/// Parses a whole file, mapping read and syntax failures to SchemaError.
Json read_file(const std::string& path);

}  // namespace tamelab::io
