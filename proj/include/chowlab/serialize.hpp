#pragma once

#include <string>

#include "json.hpp"

#include "chowlab/blowup.hpp"
#include "chowlab/cycle.hpp"
#include "chowlab/report.hpp"
#include "chowlab/sheaf.hpp"
#include "chowlab/subdivide.hpp"

namespace chow {

using Json = nlohmann::ordered_json;

// On-disk formats. All polynomials travel as text in the documented grammar
// and are re-parsed on load, so a round trip lands on the same canonical
// form. Errors from malformed documents are std::invalid_argument.
//
// cycle:  {"ambient_dim", "cube_dim", "params", "units", "d", "components":
//          [{"coef", "generators", "irreducible"}]}
// tower:  {"cube_dim", "steps": [[divisor ids]]}
// open:   {"ambient_dim", "cube_dim", "params", "closed": [generators]}
// point:  ["1/3", "1/4", ...]

Json cycle_to_json(const Cycle& Z);
Cycle cycle_from_json(const Json& j);

Json tower_to_json(const Tower& t);
Tower tower_from_json(const Json& j);

Json open_set_to_json(const OpenSet& u);
OpenSet open_set_from_json(const Json& j);

Json point_to_json(const GeneralPoint& c);
GeneralPoint point_from_json(const Json& j);

// {"suite", "statement", "pass", "failed", "checks": [...]}, plus
// "elapsed_ms" only when with_timing is set (reports are byte-stable
// across runs without it).
Json report_to_json(const SuiteReport& rep, bool with_timing = false);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

// A corpus document wraps one payload with its id and a free-form note on
// where the expected values come from.
struct Fixture {
    std::string id;
    std::string kind;  // cycle | tower | open | table
    std::string note;
    Json payload;
};
Fixture fixture_from_json(const Json& j);
Fixture load_fixture(const std::string& path);

}  // namespace chow
