#include "chowlab/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace chow {

namespace {

std::vector<std::string> string_list(const Json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument(std::string(field) + ": expected strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

Json cycle_to_json(const Cycle& Z) {
    const AmbientContext& a = Z.context();
    Json j;
    j["ambient_dim"] = a.ambient_dim();
    j["cube_dim"] = a.cube_dim();
    j["params"] = a.vars()->params;
    Json units = Json::array();
    for (const auto& u : a.open_units()) units.push_back(u.str());
    j["units"] = units;
    j["d"] = Z.d();
    Json comps = Json::array();
    for (const auto& c : Z.components()) {
        Json e;
        e["coef"] = c.coef;
        e["generators"] = c.generator_strings();
        e["irreducible"] = c.irreducible;
        comps.push_back(e);
    }
    j["components"] = comps;
    return j;
}

Cycle cycle_from_json(const Json& j) {
    int m = field(j, "ambient_dim").get<int>();
    int n = field(j, "cube_dim").get<int>();
    std::vector<std::string> params;
    if (j.contains("params")) params = string_list(j["params"], "params");
    AmbientContext plain = AmbientContext::make(m, n, params);
    std::vector<Polynomial> units;
    if (j.contains("units"))
        for (const auto& s : string_list(j["units"], "units"))
            units.push_back(Polynomial::parse(plain.vars(), s));
    AmbientContext a = units.empty() ? plain : AmbientContext::make(m, n, params, units);
    int d = field(j, "d").get<int>();
    std::vector<std::tuple<long long, std::vector<Polynomial>, bool>> parts;
    for (const auto& e : field(j, "components")) {
        long long coef = field(e, "coef").get<long long>();
        std::vector<Polynomial> gens;
        for (const auto& s : string_list(field(e, "generators"), "generators"))
            gens.push_back(Polynomial::parse(a.vars(), s));
        bool irr = e.contains("irreducible") ? e["irreducible"].get<bool>() : false;
        parts.emplace_back(coef, std::move(gens), irr);
    }
    return build_cycle(a, d, parts);
}

Json tower_to_json(const Tower& t) {
    Json j;
    j["cube_dim"] = t.dims;
    j["steps"] = t.steps;
    return j;
}

Tower tower_from_json(const Json& j) {
    int n = field(j, "cube_dim").get<int>();
    std::vector<std::vector<int>> steps;
    for (const auto& s : field(j, "steps")) steps.push_back(s.get<std::vector<int>>());
    return build_tower(n, steps);
}

Json open_set_to_json(const OpenSet& u) {
    const AmbientContext& a = u.ambient;
    Json j;
    j["ambient_dim"] = a.ambient_dim();
    j["cube_dim"] = a.cube_dim();
    j["params"] = a.vars()->params;
    Json gens = Json::array();
    for (const auto& g : u.closed_complement.gens()) gens.push_back(g.str());
    j["closed"] = gens;
    return j;
}

OpenSet open_set_from_json(const Json& j) {
    int m = field(j, "ambient_dim").get<int>();
    int n = field(j, "cube_dim").get<int>();
    std::vector<std::string> params;
    if (j.contains("params")) params = string_list(j["params"], "params");
    AmbientContext a = AmbientContext::make(m, n, params);
    std::vector<Polynomial> gens;
    for (const auto& s : string_list(field(j, "closed"), "closed"))
        gens.push_back(Polynomial::parse(a.vars(), s));
    if (gens.empty()) return OpenSet::whole(a);
    return OpenSet::complement_of(a, gens);
}

Json point_to_json(const GeneralPoint& c) {
    Json j = Json::array();
    for (const auto& v : c.values) j.push_back(v.str());
    return j;
}

GeneralPoint point_from_json(const Json& j) {
    std::vector<Rational> vals;
    for (const auto& s : string_list(j, "point")) vals.push_back(Rational::parse(s));
    return GeneralPoint::of(std::move(vals));
}

Json report_to_json(const SuiteReport& rep, bool with_timing) {
    Json j;
    j["suite"] = rep.suite;
    j["statement"] = rep.statement;
    j["pass"] = rep.pass();
    j["failed"] = rep.failed_count();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    if (with_timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

Fixture fixture_from_json(const Json& j) {
    Fixture f;
    f.id = field(j, "id").get<std::string>();
    f.kind = field(j, "kind").get<std::string>();
    f.note = j.contains("note") ? j["note"].get<std::string>() : "";
    f.payload = field(j, "payload");
    return f;
}

Fixture load_fixture(const std::string& path) { return fixture_from_json(load_json(path)); }

}  // namespace chow
