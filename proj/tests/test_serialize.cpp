// JSON round trips for cycles, towers, open sets, points, and reports, plus
// the corpus documents themselves. Runs from the repository root.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chowlab/serialize.hpp"

using namespace chow;

namespace {

Cycle one(const AmbientContext& a, int d, const std::vector<std::string>& gens,
          long long coef = 1) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(Polynomial::parse(a.vars(), s));
    return build_cycle(a, d, {{coef, ps, true}});
}

}  // namespace

TEST_CASE("cycle round trip keeps the canonical form") {
    AmbientContext a = AmbientContext::make(1, 2, {"c"});
    Cycle Z = one(a, -2, {"x1 - 2", "y1 - c", "y2 - 3"}) +
              one(a, -2, {"x1", "y1 - 2", "y2 - 5"}, -2);
    Cycle back = cycle_from_json(cycle_to_json(Z));
    CHECK(back.equals(Z));
    CHECK(back.d() == -2);
    CHECK(back.context().vars()->params == std::vector<std::string>{"c"});

    // two presentations of the same cycle serialize to the same bytes
    Cycle Z2 = one(a, -2, {"x1", "y1 - 2", "y2 - 5"}, -2) +
               one(a, -2, {"2*x1 - 4", "2*y1 - 2*c", "y2 - 3"});
    CHECK(cycle_to_json(Z).dump() == cycle_to_json(Z2).dump());
}

TEST_CASE("localized cycle round trip keeps the units") {
    AmbientContext plain = AmbientContext::make(2, 2);
    Cycle Z = one(plain, 0, {"y1 - x1*x2", "y2 - x1"});
    Cycle zu = localize(Z, {Polynomial::parse(plain.vars(), "x1")});
    Json j = cycle_to_json(zu);
    CHECK(j["units"].size() == 1);
    Cycle back = cycle_from_json(j);
    CHECK(back.equals(zu));
    CHECK(is_admissible(back).ok);
    CHECK_FALSE(is_admissible(Z).ok);
}

TEST_CASE("tower and open set and point round trips") {
    Tower t = tower_from_json(Json{{"cube_dim", 2}, {"steps", {{2, 3}}}});
    CHECK(t.dims == 2);
    CHECK(t.top().vertices.size() == 5);
    Json tj = tower_to_json(t);
    CHECK(tj["steps"] == Json({{2, 3}}));

    AmbientContext a = AmbientContext::make(1, 1);
    OpenSet u = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1*(x1 - 1)")});
    OpenSet back = open_set_from_json(open_set_to_json(u));
    CHECK_FALSE(back.is_whole());
    CHECK(open_set_to_json(back).dump() == open_set_to_json(u).dump());
    CHECK(open_set_from_json(Json{{"ambient_dim", 1}, {"cube_dim", 1}, {"closed", Json::array()}})
              .is_whole());

    GeneralPoint c = point_from_json(Json::array({"1/3", "3/4"}));
    CHECK(c.at(2) == Rational(3, 4));
    CHECK(point_to_json(c).dump() == "[\"1/3\",\"3/4\"]");
}

TEST_CASE("report serialization is stable and timing is opt-in") {
    SuiteReport rep;
    rep.suite = "demo";
    rep.statement = "two checks, one failing";
    rep.elapsed_ms = 12.5;
    rep.add("first", true);
    rep.add("second", false, "lhs = 0, rhs = [y1 - 2]");
    Json j = report_to_json(rep);
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(j["pass"] == false);
    CHECK(j["failed"] == 1);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["detail"] == "lhs = 0, rhs = [y1 - 2]");
    CHECK(report_to_json(rep, true).contains("elapsed_ms"));
}

TEST_CASE("malformed documents are rejected with the field name") {
    CHECK_THROWS_WITH_AS(cycle_from_json(Json{{"ambient_dim", 1}}),
                         doctest::Contains("cube_dim"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(load_json("corpus/no-such-file.json"), doctest::Contains("cannot open"),
                         std::invalid_argument);
    Json bad = Json{{"ambient_dim", 0}, {"cube_dim", 1}, {"d", -1},
                    {"components", Json::array({Json{{"coef", 1}}})}};
    CHECK_THROWS_WITH_AS(cycle_from_json(bad), doctest::Contains("generators"),
                         std::invalid_argument);
}

TEST_CASE("the corpus documents parse and carry their notes") {
    for (const char* id : {"point-line", "point-square", "point-over-origin", "line-in-plane",
                           "point-cube", "graph-demo"}) {
        Fixture f = load_fixture(std::string("corpus/cycles/") + id + ".json");
        CHECK(f.id == id);
        CHECK(f.kind == "cycle");
        CHECK_FALSE(f.note.empty());
        Cycle Z = cycle_from_json(f.payload);
        CHECK_FALSE(Z.is_zero());
        bool normalized_fixture = std::string(id) != "graph-demo";
        CHECK(is_admissible(Z).ok == normalized_fixture);
        if (normalized_fixture) CHECK(is_normalized(Z));
    }
    for (const char* id : {"pentagon", "demo-corner", "hexagon", "edge3"}) {
        Fixture f = load_fixture(std::string("corpus/towers/") + id + ".json");
        CHECK(f.kind == "tower");
        Tower t = tower_from_json(f.payload);
        CHECK(t.levels() >= 1);
    }
    Fixture table = load_fixture("corpus/oracle/demo-level-charts.json");
    CHECK(table.kind == "table");
    CHECK(table.payload.at("charts").size() == 5);
}
