// chowcalc: command-line front end. Exit codes: 0 success / all checks pass,
// 1 verification failure (a suite, certificate, or pipeline step failed),
// 2 usage or input-parsing problems.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chowlab/serialize.hpp"
#include "chowlab/suites.hpp"

using namespace chow;

namespace {

// Thrown while loading or validating inputs; maps to exit code 2. Failures
// of the mathematics itself keep their own types and map to exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

template <typename F>
auto load(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

GeneralPoint parse_point(const std::string& text) {
    return load([&] {
        std::vector<Rational> vals;
        for (const auto& part : split(text, ',')) vals.push_back(Rational::parse(part));
        return GeneralPoint::of(std::move(vals));
    });
}

Cycle load_cycle(const std::string& path) {
    return load([&] {
        Json j = load_json(path);
        return cycle_from_json(j.contains("payload") ? j["payload"] : j);
    });
}

Tower load_tower(const std::string& corpus, const std::string& name) {
    return load([&] {
        std::string path = name;
        if (name.find('/') == std::string::npos && name.find(".json") == std::string::npos)
            path = corpus + "/towers/" + name + ".json";
        Json j = load_json(path);
        return tower_from_json(j.contains("payload") ? j["payload"] : j);
    });
}

OpenSet parse_open(const AmbientContext& a, const std::string& gens) {
    return load([&] {
        std::vector<Polynomial> ps;
        for (const auto& g : split(gens, ','))
            ps.push_back(Polynomial::parse(a.vars(), g));
        return OpenSet::complement_of(a, ps);
    });
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_cycle_human(const Cycle& Z, bool with_verdict = true) {
    std::cout << "  " << Z.str() << "   (d = " << Z.d() << ", cube dim " << Z.cube_dim()
              << ", " << Z.components().size() << " components)\n";
    const auto& units = Z.context().open_units();
    if (!units.empty()) {
        std::cout << "  over the open set where";
        for (size_t i = 0; i < units.size(); ++i)
            std::cout << (i ? ", " : " ") << units[i].str() << " != 0";
        std::cout << "\n";
    }
    if (with_verdict) {
        AdmissibilityWitness w = is_admissible(Z);
        std::cout << "  admissible: " << (w.ok ? "yes" : "no");
        if (!w.ok) std::cout << "   " << w.detail;
        std::cout << "\n";
    }
}

Json cycle_with_verdict(const Cycle& Z) {
    Json j;
    j["cycle"] = cycle_to_json(Z);
    AdmissibilityWitness w = is_admissible(Z);
    j["admissible"] = w.ok;
    j["witness"] = w.detail;
    return j;
}

int print_report(const SuiteReport& rep, bool json) {
    if (json) {
        emit(report_to_json(rep));
    } else {
        std::cout << "suite " << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
                  << rep.checks.size() << " checks, " << (int)rep.elapsed_ms << " ms)\n";
        std::cout << "  claim: " << rep.statement << "\n";
        for (const auto& c : rep.checks) {
            std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) std::cout << "   " << c.detail;
            std::cout << "\n";
        }
    }
    return rep.pass() ? 0 : 1;
}

struct PipelineEnv {
    std::string corpus;
};

Cycle apply_step(const Cycle& Z, const std::string& step, const PipelineEnv& env,
                 std::string* note) {
    std::vector<std::string> parts = split(step, ':');
    const std::string& op = parts[0];
    auto want = [&](size_t k) {
        if (parts.size() != k + 1)
            throw UsageError("step '" + step + "': expected " + std::to_string(k) +
                             " argument(s)");
    };
    if (op == "face") {
        want(2);
        int i = load([&] { return std::stoi(parts[1]); });
        int eps = load([&] { return std::stoi(parts[2]); });
        if (eps != 0 && eps != 1) throw UsageError("face side must be 0 or 1");
        return face(Z, i, eps);
    }
    if (op == "boundary") {
        want(0);
        return boundary_nondegenerate(Z);
    }
    if (op == "bidiv") {
        want(2);
        int i = load([&] { return std::stoi(parts[1]); });
        Rational c = load([&] { return Rational::parse(parts[2]); });
        return bidivision(Z, i, c);
    }
    if (op == "subdivide") {
        want(1);
        return cubical_subdivision(Z, parse_point(parts[1]), SubdivisionForm::Iterated);
    }
    if (op == "tower-apply") {
        want(2);
        Tower t = load_tower(env.corpus, parts[1]);
        LevelSubdivision lv = sd_level(Z, t, parse_point(parts[2]));
        if (note)
            *note = lv.admissible.ok ? "level subdivision admissible"
                                     : "level subdivision inadmissible: " + lv.admissible.detail;
        return lv.cycle;
    }
    if (op == "restrict") {
        want(1);
        Polynomial g =
            load([&] { return Polynomial::parse(Z.context().vars(), parts[1]); });
        return localize(Z, {g});
    }
    if (op == "close") {
        want(0);
        return closure_from_open(Z);
    }
    throw UsageError("unknown pipeline step: " + op);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for algebraic cycles on affine cubes"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 7;
    bool json = false;
    std::string corpus = "corpus";
    app.add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
    app.add_flag("--json", json, "machine-readable output (stable for a fixed seed)");
    app.add_option("--corpus", corpus, "fixture directory")->capture_default_str();

    auto* vcmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    bool list_suites = false;
    int random = 100, nmax = 4;
    vcmd->add_option("suite", suite_name, "suite name (see --list)");
    vcmd->add_flag("--list", list_suites, "list the registered suites");
    vcmd->add_option("--random", random, "sample count for the randomized suites")
        ->capture_default_str();
    vcmd->add_option("--nmax", nmax, "cube dimension bound for the face table")
        ->capture_default_str();

    auto* ccmd = app.add_subcommand("cycle", "inspect or transform one cycle file");
    std::string caction, cfile, cunits, cout_path;
    ccmd->add_option("action", caction, "show | boundary | normalize | localize | close")
        ->required();
    ccmd->add_option("file", cfile, "cycle JSON file")->required();
    ccmd->add_option("--units", cunits, "ambient polynomials for localize (comma separated)");
    ccmd->add_option("-o,--out", cout_path, "write the resulting cycle JSON here");

    auto* scmd = app.add_subcommand("subdivide", "cubical subdivision at a general point");
    std::string sfile, spoint, sform = "iterated", sout_path;
    scmd->add_option("file", sfile, "cycle JSON file")->required();
    scmd->add_option("--point", spoint, "scalars, e.g. 1/3,1/4")->required();
    scmd->add_option("--form", sform, "iterated | vertex-sum")->capture_default_str();
    scmd->add_option("-o,--out", sout_path, "write the resulting cycle JSON here");

    auto* tcmd = app.add_subcommand("tower", "blow-up towers over the cube");
    std::string taction, targ, tcycle, tpoint, tout_path;
    tcmd->add_option("action", taction, "info | apply")->required();
    tcmd->add_option("name", targ, "tower name in the corpus, or a JSON file")->required();
    tcmd->add_option("--cycle", tcycle, "cycle JSON file (apply)");
    tcmd->add_option("--point", tpoint, "scalars for the chart scalings (apply)");
    tcmd->add_option("-o,--out", tout_path, "write the resulting cycle JSON here");

    auto* mcmd = app.add_subcommand("mv", "two-open cover checks");
    std::string maction = "demo", mfile;
    int mambient = 1;
    mcmd->add_option("action", maction, "demo")->required();
    mcmd->add_option("--file", mfile, "cover corpus JSON (defaults to the fixture)");
    mcmd->add_option("--ambient", mambient, "ambient dimension for the built-in corpus")
        ->capture_default_str();

    auto* gcmd = app.add_subcommand("glue", "glue two cycles agreeing on an overlap");
    std::string gfile1, gfile2, guopen, gvopen, gout_path;
    gcmd->add_option("first", gfile1, "cycle JSON file over the first open")->required();
    gcmd->add_option("second", gfile2, "cycle JSON file over the second open")->required();
    gcmd->add_option("--u-open", guopen, "closed complement of the first open")->required();
    gcmd->add_option("--v-open", gvopen, "closed complement of the second open")->required();
    gcmd->add_option("-o,--out", gout_path, "write the glued cycle JSON here");

    auto* pcmd = app.add_subcommand("pipeline", "apply a chain of steps to a cycle file");
    std::string pfile, pout_path;
    std::vector<std::string> psteps;
    pcmd->add_option("file", pfile, "cycle JSON file")->required();
    pcmd->add_option("--step", psteps,
                     "face:i:eps | boundary | bidiv:i:c | subdivide:c1,c2 | "
                     "tower-apply:name:c1,c2 | restrict:poly | close (repeatable)");
    pcmd->add_option("-o,--out", pout_path, "write the final cycle JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vcmd->parsed()) {
            if (list_suites) {
                if (json) {
                    Json j = Json::array();
                    for (const auto& s : suite_registry())
                        j.push_back({{"name", s.name}, {"statement", s.statement}});
                    emit(j);
                } else {
                    for (const auto& s : suite_registry())
                        std::cout << s.name << "\n    " << s.statement << "\n";
                }
                return 0;
            }
            if (suite_name.empty()) throw UsageError("verify: give a suite name or --list");
            const SuiteSpec* spec = find_suite(suite_name);
            if (!spec) throw UsageError("unknown suite: " + suite_name);
            SuiteOptions opts;
            opts.seed = seed;
            opts.random = random;
            opts.nmax = nmax;
            opts.corpus = corpus;
            return print_report(run_suite(*spec, opts), json);
        }

        if (ccmd->parsed()) {
            Cycle Z = load_cycle(cfile);
            Cycle out = Z;
            if (caction == "show") {
                out = Z;
            } else if (caction == "boundary") {
                out = boundary_nondegenerate(Z);
            } else if (caction == "normalize") {
                out = kill_degenerates(Z);
            } else if (caction == "localize") {
                if (cunits.empty()) throw UsageError("localize needs --units");
                std::vector<Polynomial> units;
                for (const auto& g : split(cunits, ','))
                    units.push_back(
                        load([&] { return Polynomial::parse(Z.context().vars(), g); }));
                out = localize(Z, units);
            } else if (caction == "close") {
                out = closure_from_open(Z);
            } else {
                throw UsageError("unknown cycle action: " + caction);
            }
            if (json)
                emit(cycle_with_verdict(out));
            else
                print_cycle_human(out);
            if (!cout_path.empty()) save_json(cout_path, cycle_to_json(out));
            return 0;
        }

        if (scmd->parsed()) {
            Cycle Z = load_cycle(sfile);
            SubdivisionForm form;
            if (sform == "iterated")
                form = SubdivisionForm::Iterated;
            else if (sform == "vertex-sum")
                form = SubdivisionForm::VertexSum;
            else
                throw UsageError("unknown form: " + sform);
            Cycle out = cubical_subdivision(Z, parse_point(spoint), form);
            if (json)
                emit(cycle_with_verdict(out));
            else
                print_cycle_human(out);
            if (!sout_path.empty()) save_json(sout_path, cycle_to_json(out));
            return 0;
        }

        if (tcmd->parsed()) {
            Tower T = load_tower(corpus, targ);
            if (taction == "info") {
                if (json) {
                    Json j;
                    j["cube_dim"] = T.dims;
                    j["steps"] = T.steps;
                    Json levels = Json::array();
                    for (const auto& S : T.spaces) {
                        Json lv;
                        lv["divisors"] = Json::array();
                        for (const auto& d : S.divisors) lv["divisors"].push_back(d.str());
                        Json vs = Json::array();
                        std::vector<int> signs = vertex_signs(S);
                        for (size_t i = 0; i < S.vertices.size(); ++i)
                            vs.push_back({{"name", S.vertices[i].name}, {"sign", signs[i]}});
                        lv["vertices"] = vs;
                        lv["edges"] = (int)S.edges.size();
                        levels.push_back(lv);
                    }
                    j["levels"] = levels;
                    emit(j);
                } else {
                    std::cout << "tower on the " << T.dims << "-cube, " << T.levels()
                              << " step(s)\n";
                    for (size_t lvl = 0; lvl < T.spaces.size(); ++lvl) {
                        const auto& S = T.spaces[lvl];
                        std::cout << "level " << lvl << ": " << S.divisors.size()
                                  << " divisors, " << S.vertices.size() << " vertices, "
                                  << S.edges.size() << " edges\n";
                        std::vector<int> signs = vertex_signs(S);
                        for (size_t i = 0; i < S.vertices.size(); ++i)
                            std::cout << "    " << S.vertices[i].name << "   sign "
                                      << (signs[i] > 0 ? "+1" : "-1") << "\n";
                    }
                }
                return 0;
            }
            if (taction == "apply") {
                if (tcycle.empty() || tpoint.empty())
                    throw UsageError("tower apply needs --cycle and --point");
                Cycle Z = load_cycle(tcycle);
                LevelSubdivision lv = sd_level(Z, T, parse_point(tpoint));
                if (json) {
                    Json j;
                    j["cycle"] = cycle_to_json(lv.cycle);
                    j["admissible"] = lv.admissible.ok;
                    j["witness"] = lv.admissible.detail;
                    emit(j);
                } else {
                    print_cycle_human(lv.cycle, false);
                    std::cout << "  admissible: " << (lv.admissible.ok ? "yes" : "no");
                    if (!lv.admissible.ok) std::cout << "   " << lv.admissible.detail;
                    std::cout << "\n";
                }
                if (!tout_path.empty()) save_json(tout_path, cycle_to_json(lv.cycle));
                return lv.admissible.ok ? 0 : 1;
            }
            throw UsageError("unknown tower action: " + taction);
        }

        if (mcmd->parsed()) {
            if (maction != "demo") throw UsageError("unknown mv action: " + maction);
            OpenSet U = OpenSet::whole(AmbientContext::make(1, 1));
            OpenSet V = U;
            std::vector<Cycle> samples;
            if (!mfile.empty() || mambient == 1) {
                std::string path = mfile.empty() ? corpus + "/mv/affine-line.json" : mfile;
                Fixture f = load([&] { return load_fixture(path); });
                U = load([&] { return open_set_from_json(f.payload.at("u_open")); });
                V = load([&] { return open_set_from_json(f.payload.at("v_open")); });
                for (const auto& c : f.payload.at("samples"))
                    samples.push_back(load([&] { return cycle_from_json(c); }));
            } else {
                AmbientContext a = AmbientContext::make(mambient, 1);
                auto coord = [&](int k) { return "x" + std::to_string(k); };
                U = parse_open(a, coord(1));
                V = parse_open(a, coord(1) + " - 1");
                auto pt = [&](int at) {
                    std::vector<Polynomial> gens;
                    gens.push_back(
                        Polynomial::parse(a.vars(), coord(1) + " - " + std::to_string(at)));
                    for (int k = 2; k <= mambient; ++k)
                        gens.push_back(Polynomial::parse(a.vars(), coord(k)));
                    gens.push_back(Polynomial::parse(a.vars(), "y1 - 2"));
                    return build_cycle(a, -1, {{1, gens, true}});
                };
                samples = {pt(0) + pt(2), pt(2), pt(0), pt(1)};
            }
            return print_report(mv_check(U, V, samples), json);
        }

        if (gcmd->parsed()) {
            Cycle x1 = load_cycle(gfile1);
            Cycle x2 = load_cycle(gfile2);
            OpenSet U = parse_open(x1.context(), guopen);
            OpenSet V = parse_open(x1.context(), gvopen);
            GlueResult g = glue(x1, x2, U, V);
            if (json) {
                Json j;
                j["glued"] = cycle_to_json(g.glued);
                j["delta_u"] = cycle_to_json(g.delta_u);
                j["delta_v"] = cycle_to_json(g.delta_v);
                emit(j);
            } else {
                std::cout << "glued:\n";
                print_cycle_human(g.glued);
                std::cout << "residual over the first open:  " << g.delta_u.str() << "\n";
                std::cout << "residual over the second open: " << g.delta_v.str() << "\n";
            }
            if (!gout_path.empty()) save_json(gout_path, cycle_to_json(g.glued));
            return 0;
        }

        if (pcmd->parsed()) {
            Cycle Z = load_cycle(pfile);
            PipelineEnv env{corpus};
            Json steps_json = Json::array();
            if (!json) {
                std::cout << "input:\n";
                print_cycle_human(Z);
            } else {
                steps_json.push_back(cycle_with_verdict(Z));
                steps_json.back()["step"] = "input";
            }
            for (size_t k = 0; k < psteps.size(); ++k) {
                std::string note;
                try {
                    Z = apply_step(Z, psteps[k], env, &note);
                } catch (const UsageError&) {
                    throw;
                } catch (const std::exception& e) {
                    std::ostringstream msg;
                    msg << "step " << (k + 1) << " (" << psteps[k] << ") failed: " << e.what();
                    if (json) {
                        Json j;
                        j["steps"] = steps_json;
                        j["ok"] = false;
                        j["error"] = msg.str();
                        emit(j);
                    } else {
                        std::cout << msg.str() << "\n";
                    }
                    return 1;
                }
                if (json) {
                    Json j = cycle_with_verdict(Z);
                    j["step"] = psteps[k];
                    if (!note.empty()) j["note"] = note;
                    steps_json.push_back(j);
                } else {
                    std::cout << "step " << (k + 1) << ": " << psteps[k] << "\n";
                    print_cycle_human(Z);
                    if (!note.empty()) std::cout << "  " << note << "\n";
                }
            }
            if (json) {
                Json j;
                j["steps"] = steps_json;
                j["ok"] = true;
                emit(j);
            }
            if (!pout_path.empty()) save_json(pout_path, cycle_to_json(Z));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
