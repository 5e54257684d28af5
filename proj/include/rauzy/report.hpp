#pragma once

#include <string>

#include <json.hpp>

#include "rauzy/dynamics.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/nice.hpp"

namespace rauzy {

using Json = nlohmann::ordered_json;

Json face_json(const Face& f, int n);
Json pisot_json(const PisotData& pd);
Json nice_json(const NiceReport& r, int n, double eps);
Json tiling_json(const TilingAudit& a);
Json series_json(const ConvergenceSeries& s, double tol);
Json set_equation_json(const SetEquationReport& r);
Json coincidence_json(const CoincidenceTable& t);
Json first_return_json(const FirstReturnReport& r);
Json coding_json(const CodingReport& r);

// Two-space indentation, trailing newline.
std::string dump_report(const Json& j);

}  // namespace rauzy
