#pragma once

#include <json.hpp>

#include "opspec/cline.hpp"
#include "opspec/drazin.hpp"
#include "opspec/matrix.hpp"
#include "opspec/operator.hpp"
#include "opspec/region.hpp"

namespace opspec {

using Json = nlohmann::ordered_json;

// Every decoder throws Error("bad-json") on malformed input.

Json rational_to_json(const Rational& q);                 // "p/q"
Rational rational_from_json(const Json& j);               // also accepts integers
Json gaussian_to_json(const GaussianRational& z);         // {"re": "p/q", "im": "p/q"}
GaussianRational gaussian_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [["p/q+r/s i", ...], ...]}; integer entries accepted.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// A list of primitives tagged "points", "seq", "circle", "disc", "annulus" or
/// "cell" (a general sign-condition box), each with optional exceptions.
Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

/// Natural numbers as integers and infinity as "inf".
Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& j);

/// {"cells": [{"region": ..., "class": ...}, ...]}
Json picture_to_json(const SpectralPicture& p);
SpectralPicture picture_from_json(const Json& j);

/// Expression AST, e.g. {"op": "dsum", "args": [...]}.
Json expr_to_json(const Expr& e);
ExprPtr expr_from_json(const Json& j);

/// {"index", "inverse", "axioms": {"ab=ba", "bab=b", "a^(r+1)b=a^r"}}; output only.
Json drazin_to_json(const DrazinCertificate& c);

/// Per-identity name and pass flag, with the residual matrix on failure; output only.
Json identity_report_to_json(const IdentityReport& r);

}  // namespace opspec
