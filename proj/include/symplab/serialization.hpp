#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symplab/cohomology_engine.hpp"

namespace symplab::io {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
/// Accepts rational strings or JSON integers.
Vector vector_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// A square matrix given as nested rows, e.g. [["1","0"],["0","-1"]].
Matrix matrix_from_rows(const Json& rows);
Matrix parse_matrix_text(const std::string& text);

/// {name, dims, d_blocks, star_blocks, window}, plus labels and inner when
/// present.
Json model_to_json(const model::ComplexModel& m);
/// Rebuilds a model from a bundle. The codifferential is reassembled from d
/// and the star.
model::ModelPtr model_from_json(const Json& j);

/// {degree, coords}
Json form_to_json(const model::FormVector& v);
model::FormVector form_from_json(const Json& j, model::ModelPtr m);

Json report_to_json(const cohomology::CohomologyReport& r);
Json hodge_to_json(const cohomology::HodgeReport& h);

/// Header "model,theory,degree,dimension,windowed" and one row per degree.
/// A Hodge report contributes rows with theory "hodgeKernel".
std::string reports_to_csv(const std::vector<cohomology::CohomologyReport>& reports,
                           const cohomology::HodgeReport* hodge = nullptr);

}  // namespace symplab::io
