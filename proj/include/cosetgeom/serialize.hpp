#pragma once

#include <json.hpp>

#include "cosetgeom/coset_table.hpp"
#include "cosetgeom/geometry.hpp"
#include "cosetgeom/low_index.hpp"
#include "cosetgeom/mic.hpp"
#include "cosetgeom/presentation.hpp"

namespace cosetgeom {

using Json = nlohmann::ordered_json;

/// {"index": d, "action": [[...], ...], "reps": ["", "a", ...]}, 1-based.
Json coset_table_to_json(const CosetTable& t, const Presentation& p);
CosetTable coset_table_from_json(const Json& j);

/// {"index", "class_id", "generators", "table"}.
Json record_to_json(const SubgroupRecord& r, const Presentation& p);
SubgroupRecord record_from_json(const Json& j, const Presentation& p);

/// {"presentation", "max_index", "eta", "subgroups"}.
Json low_index_to_json(const Presentation& p, int max_index,
                       const std::vector<SubgroupRecord>& records);

/// {"points": d, "lines": [[...]], "contextual": [...]}, points 1-based.
Json geometry_to_json(const IncidenceGeometry& g);
IncidenceGeometry geometry_from_json(const Json& j);

/// Arrays of [re, im] pairs.
Json fiducial_to_json(const CVector& v);
CVector fiducial_from_json(const Json& j);

/// {"dim", "gram_rank", "pp", "is_mic", "is_sic"}.
Json fiducial_report_to_json(const FiducialReport& r);

/// Graphviz: points as nodes, size-2 lines as edges, longer lines as
/// auxiliary line nodes joined to their points.
std::string geometry_to_dot(const IncidenceGeometry& g, const std::string& name);

}  // namespace cosetgeom
