#pragma once

#include "cfvar/jet_calculus.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace cfvar::cli {

using Json = nlohmann::ordered_json;

/// JSON text with every float printed as %.17g (NaN and inf as null).
std::string dump_json(const Json& j, int indent = 2);

/// Indented "key: value" rendering for terminals.
std::string render_text(const Json& j);

/// One row per grid point: index, interior flag, coordinates, the W1, W2,
/// CF components and their norms.
void write_residual_csv(std::ostream& out, const ChartGeometry& geo, const ResidualField& res);

}  // namespace cfvar::cli
