#include "chowlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chowlab/blowup.hpp"
#include "chowlab/serialize.hpp"
#include "chowlab/sheaf.hpp"
#include "chowlab/subdivide.hpp"

namespace chow {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kNormalizedIds = {
    "point-line", "point-square", "point-over-origin", "line-in-plane", "point-cube"};

Cycle corpus_cycle(const SuiteOptions& o, const std::string& id) {
    return cycle_from_json(load_fixture(o.corpus + "/cycles/" + id + ".json").payload);
}

Tower corpus_tower(const SuiteOptions& o, const std::string& id) {
    return tower_from_json(load_fixture(o.corpus + "/towers/" + id + ".json").payload);
}

std::string forms(const Cycle& lhs, const Cycle& rhs) {
    return "lhs = " + lhs.str() + ", rhs = " + rhs.str();
}

// Deterministic small-coefficient sampler for the randomized suites. Raw
// modulo keeps the stream independent of library distribution internals, so
// a fixed seed replays byte-identically.
struct LinearSampler {
    std::mt19937_64 rng;
    explicit LinearSampler(uint64_t seed) : rng(seed) {}

    int small() { return (int)(rng() % 7) - 3; }
    int positive(int bound) { return (int)(rng() % (uint64_t)bound); }

    // A random affine-linear polynomial involving at least one variable.
    Polynomial linear_form(const AmbientContext& a) {
        for (;;) {
            std::ostringstream s;
            bool any = false;
            auto term = [&](const std::string& v) {
                int c = small();
                if (c == 0) return;
                s << (any ? " + " : "") << c << "*" << v;
                any = true;
            };
            for (int i = 1; i <= a.ambient_dim(); ++i) term("x" + std::to_string(i));
            for (int i = 1; i <= a.cube_dim(); ++i) term("y" + std::to_string(i));
            if (!any) continue;
            s << " + " << small();
            return Polynomial::parse(a.vars(), s.str());
        }
    }

    // An admissible cycle whose components are cut by `codim` linear forms.
    Cycle draw(int m, int n, int codim, int parts) {
        AmbientContext a = AmbientContext::make(m, n);
        for (int attempt = 0; attempt < 400; ++attempt) {
            std::vector<std::tuple<long long, std::vector<Polynomial>, bool>> comps;
            for (int p = 0; p < parts; ++p) {
                std::vector<Polynomial> gens;
                for (int g = 0; g < codim; ++g) gens.push_back(linear_form(a));
                long long coef = small();
                comps.emplace_back(coef == 0 ? 1 : coef, std::move(gens), false);
            }
            try {
                Cycle Z = build_cycle(a, m - codim, comps);
                if (Z.is_zero()) continue;
                if (is_admissible(Z).ok) return Z;
            } catch (const std::exception&) {
                // degenerate system; redraw
            }
        }
        throw std::logic_error("linear sampler exhausted its retry budget");
    }
};

SuiteReport suite_eta(const SuiteOptions&) { return verify_eta_table(); }

SuiteReport suite_h_faces(const SuiteOptions& o) { return verify_h_face_table(o.nmax); }

SuiteReport suite_bidiv_homotopy(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "for every normalized fixture, the homotopy cycle phi of the bi-division satisfies "
        "boundary(phi) = Z - delta_{c_i,i}(Z) exactly, at several sampled general scalars";
    for (const auto& id : kNormalizedIds) {
        Cycle Z = corpus_cycle(o, id);
        std::vector<int> dirs = {1};
        if (Z.cube_dim() > 1) dirs.push_back(Z.cube_dim());
        for (int i : dirs) {
            for (int k = 0; k < 3; ++k) {
                std::string nm =
                    id + " i=" + std::to_string(i) + " sample " + std::to_string(k + 1);
                try {
                    GeneralPoint c =
                        sample_general_position(Z, o.seed + 101 * k + 13 * i, 200);
                    HomotopyCertificate cert = phi_homotopy(Z, i, c);
                    rep.add(nm, cert.pass,
                            cert.pass ? "c = " + c.str() : forms(cert.lhs, cert.rhs));
                } catch (const std::exception& e) {
                    rep.add(nm, false, e.what());
                }
            }
        }
    }
    return rep;
}

SuiteReport suite_delta_normal(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the bi-division of a normalized cycle is normalized again: all 2n codimension-1 "
        "faces of delta_{c_i,i}(Z) vanish after degenerate reduction";
    for (const auto& id : kNormalizedIds) {
        Cycle Z = corpus_cycle(o, id);
        for (int i = 1; i <= Z.cube_dim(); ++i) {
            std::string nm = id + " i=" + std::to_string(i);
            try {
                GeneralPoint c = sample_general_position(Z, o.seed + 7 * i, 200);
                Cycle D = bidivision(Z, i, c.at(i));
                bool ok = is_normalized(D) && is_admissible(D).ok;
                rep.add(nm, ok, ok ? "" : "delta = " + D.str());
            } catch (const std::exception& e) {
                rep.add(nm, false, e.what());
            }
        }
    }
    return rep;
}

SuiteReport suite_sd_two_forms(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the iterated bi-division form of the cubical subdivision equals the vertex-sum "
        "form with one signed pullback per cube vertex";
    for (const auto& id : kNormalizedIds) {
        try {
            Cycle Z = corpus_cycle(o, id);
            GeneralPoint c = sample_general_position(Z, o.seed + 5, 200);
            Cycle A = cubical_subdivision(Z, c, SubdivisionForm::Iterated);
            Cycle B = cubical_subdivision(Z, c, SubdivisionForm::VertexSum);
            rep.add(id, A.equals(B), A.equals(B) ? "c = " + c.str() : forms(A, B));
        } catch (const std::exception& e) {
            rep.add(id, false, e.what());
        }
    }
    return rep;
}

SuiteReport suite_sd_chain(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the telescoping chain phi_n of bi-division homotopies satisfies "
        "boundary(phi_n) = Z - sd_c(Z) exactly, and the subdivided cycle is normalized";
    for (const auto& id : kNormalizedIds) {
        try {
            Cycle Z = corpus_cycle(o, id);
            GeneralPoint c = sample_general_position(Z, o.seed + 9, 200);
            ChainCertificate cert = phi_chain(Z, c);
            bool ok = cert.pass && is_normalized(cert.subdivided);
            rep.add(id, ok, ok ? "c = " + c.str() : forms(cert.lhs, cert.rhs));
        } catch (const std::exception& e) {
            rep.add(id, false, e.what());
        }
    }
    return rep;
}

SuiteReport suite_boundary_squared(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the alternating face sum satisfies boundary(boundary(Z)) = 0 on randomized "
        "admissible linear cycles, both plainly and after degenerate reduction";
    LinearSampler s(o.seed);
    const int configs[3][3] = {{1, 2, 2}, {0, 2, 2}, {2, 2, 2}};
    int count = std::max(1, o.random);
    for (int k = 0; k < count; ++k) {
        const int* cfg = configs[k % 3];
        std::string nm = "sample " + std::to_string(k + 1) + " (m=" + std::to_string(cfg[0]) +
                         ", n=" + std::to_string(cfg[1]) + ")";
        try {
            Cycle Z = s.draw(cfg[0], cfg[1], cfg[2], 1 + k % 2);
            Cycle dd = boundary(boundary(Z));
            Cycle ddn = boundary_nondegenerate(boundary_nondegenerate(Z));
            bool ok = dd.is_zero() && ddn.is_zero();
            rep.add(nm, ok, ok ? "" : "dd = " + dd.str() + ", reduced dd = " + ddn.str());
        } catch (const std::exception& e) {
            rep.add(nm, false, e.what());
        }
    }
    return rep;
}

SuiteReport suite_involution(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "pulling back along the j-th involution swaps the two faces in direction j and "
        "preserves the admissibility verdict";
    std::vector<std::pair<std::string, Cycle>> fixtures;
    for (const auto& id : kNormalizedIds) fixtures.emplace_back(id, corpus_cycle(o, id));
    Cycle closure = corpus_cycle(o, "graph-demo");
    fixtures.emplace_back("graph-demo", closure);
    fixtures.emplace_back("graph-demo off x1=0",
                          localize(closure, {Polynomial::parse(closure.context().vars(), "x1")}));
    LinearSampler s(o.seed + 3);
    int extra = std::max(1, o.random / 10);
    for (int k = 0; k < extra; ++k)
        fixtures.emplace_back("random sample " + std::to_string(k + 1), s.draw(1, 2, 2, 1));
    for (const auto& [id, Z] : fixtures) {
        CtxPtr ctx = CubeMorphism::cube_ctx(Z.cube_dim());
        for (int j = 1; j <= Z.cube_dim(); ++j) {
            std::string nm = id + " j=" + std::to_string(j);
            try {
                Cycle T = pullback(Z, CubeMorphism::involution(ctx, j));
                bool swaps = face(T, j, 0).equals(face(Z, j, 1)) &&
                             face(T, j, 1).equals(face(Z, j, 0));
                bool verdict = is_admissible(T).ok == is_admissible(Z).ok;
                rep.add(nm, swaps && verdict,
                        swaps ? (verdict ? "" : "admissibility verdict changed")
                              : "face swap failed");
            } catch (const std::exception& e) {
                rep.add(nm, false, e.what());
            }
        }
    }
    return rep;
}

SuiteReport suite_signs(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "vertex signs anchor at (-1)^(number of ones) on untouched corners, satisfy "
        "sign(v) = -sgn(g) sign(w) across every edge at every level, and every edge of "
        "every level joins exactly two vertices";
    std::vector<std::pair<std::string, Tower>> towers;
    for (const auto& id : {"pentagon", "demo-corner", "hexagon", "edge3"})
        towers.emplace_back(id, corpus_tower(o, id));
    towers.emplace_back("pentagon homotopy lift", homotopy_tower(corpus_tower(o, "pentagon")));

    for (const auto& [id, T] : towers) {
        for (int lvl = 0; lvl < (int)T.spaces.size(); ++lvl) {
            const DistinguishedSpace& S = T.spaces[lvl];
            std::string nm = id + " level " + std::to_string(lvl);
            try {
                std::vector<int> signs = vertex_signs(S);
                bool ok = true;
                std::string why;
                for (const auto& v : S.vertices)
                    if (v.corner && signs[&v - S.vertices.data()] != vertex_sign(*v.corner)) {
                        ok = false;
                        why = "corner anchor violated at " + v.name;
                    }
                for (const auto& e : S.edges) {
                    int cnt = 0;
                    for (const auto& v : S.vertices)
                        if (std::includes(v.incident.begin(), v.incident.end(),
                                          e.divisors.begin(), e.divisors.end()))
                            ++cnt;
                    if (cnt != 2) {
                        ok = false;
                        why = "an edge with " + std::to_string(cnt) + " vertices";
                    }
                    if (signs[e.v] != -permutation_sign(e.perm) * signs[e.w]) {
                        ok = false;
                        why = "recurrence violated between " + S.vertices[e.v].name + " and " +
                              S.vertices[e.w].name;
                    }
                }
                if (lvl == 0)
                    for (const auto& v : S.vertices)
                        if (!v.corner) {
                            ok = false;
                            why = "level-0 vertex without a corner anchor";
                        }
                rep.add(nm, ok, why);
            } catch (const std::exception& e) {
                rep.add(nm, false, e.what());
            }
        }
    }
    const DistinguishedSpace& pent = towers[0].second.top();
    bool counts = pent.divisors.size() == 5 && pent.vertices.size() == 5 && pent.edges.size() == 5;
    rep.add("pentagon counts 5/5/5", counts,
            counts ? ""
                   : std::to_string(pent.divisors.size()) + "/" +
                         std::to_string(pent.vertices.size()) + "/" +
                         std::to_string(pent.edges.size()));
    return rep;
}

SuiteReport suite_mv(const SuiteOptions& o) {
    Fixture f = load_fixture(o.corpus + "/mv/affine-line.json");
    OpenSet U = open_set_from_json(f.payload.at("u_open"));
    OpenSet V = open_set_from_json(f.payload.at("v_open"));
    std::vector<Cycle> samples;
    for (const auto& c : f.payload.at("samples")) samples.push_back(cycle_from_json(c));
    SuiteReport rep = mv_check(U, V, samples);

    // randomized kernel-intersection law over the same ambient line
    LinearSampler s(o.seed + 11);
    AmbientContext a = U.ambient;
    int rounds = std::max(1, o.random / 10);
    for (int k = 0; k < rounds; ++k) {
        std::string nm = "kernel law, random supports " + std::to_string(k + 1);
        try {
            std::vector<std::tuple<long long, std::vector<Polynomial>, bool>> parts;
            int npts = 1 + s.positive(3);
            for (int p = 0; p < npts; ++p) {
                int at = s.small();
                parts.emplace_back(
                    1 + s.positive(3),
                    std::vector<Polynomial>{
                        Polynomial::parse(a.vars(), "x1 - " + std::to_string(at)),
                        Polynomial::parse(a.vars(), "y1 - 2")},
                    true);
            }
            Cycle Z = build_cycle(a, -1, parts);
            auto support = [&](int lo) {
                std::ostringstream prod;
                for (int t = 0; t < 3; ++t)
                    prod << (t ? "*" : "") << "(x1 - " << (lo + t) << ")";
                return Ideal(a.vars(), {Polynomial::parse(a.vars(), prod.str())});
            };
            Ideal W1 = support(s.small());
            Ideal W2 = support(s.small());
            std::vector<Polynomial> both = W1.gens();
            for (const auto& g : W2.gens()) both.push_back(g);
            Ideal meet(a.vars(), both);
            bool lhs = in_kernel(Z, W1) && in_kernel(Z, W2);
            bool rhs = in_kernel(Z, meet);
            rep.add(nm, lhs == rhs,
                    lhs == rhs ? "" : "separate kernels disagree with the intersected support");
        } catch (const std::exception& e) {
            rep.add(nm, false, e.what());
        }
    }
    return rep;
}

SuiteReport suite_h0(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the level homotopy cycle H satisfies boundary(H) = sd^M(Z) - sd^0(Z) after "
        "degenerate reduction, on normalized fixtures over the fixture towers";
    auto run = [&](const std::string& nm, const Cycle& Z, const Tower& T,
                   std::vector<Rational> cp) {
        try {
            H0Certificate cert = homotopy_h0(Z, T, GeneralPoint::of(std::move(cp)));
            rep.add(nm, cert.pass, cert.pass ? "" : forms(cert.lhs, cert.rhs));
        } catch (const std::exception& e) {
            rep.add(nm, false, e.what());
        }
    };
    Cycle sq = corpus_cycle(o, "point-square");
    Cycle cube = corpus_cycle(o, "point-cube");
    std::vector<Rational> cp2 = {Rational(1, 3), Rational(1, 4), Rational(1, 5)};
    std::vector<Rational> cp3 = {Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(1, 7)};
    run("pentagon tower over the square points", sq, corpus_tower(o, "pentagon"), cp2);
    run("corner tower over the square points", sq, corpus_tower(o, "demo-corner"), cp2);
    run("edge tower over the cube point", cube, corpus_tower(o, "edge3"), cp3);
    try {
        H0Certificate triv = homotopy_h0(sq, build_tower(2, {}), GeneralPoint::of(cp2));
        bool ok = triv.pass && triv.lhs.is_zero() && triv.rhs.is_zero();
        rep.add("trivial tower yields the zero certificate", ok,
                ok ? "" : forms(triv.lhs, triv.rhs));
    } catch (const std::exception& e) {
        rep.add("trivial tower yields the zero certificate", false, e.what());
    }
    return rep;
}

SuiteReport suite_localization(const SuiteOptions& o) {
    SuiteReport rep;
    rep.statement =
        "the closure of the demo graph cycle fails admissibility exactly at the blown-up "
        "corner, its restriction off x1 = 0 is admissible, the corner tower's level "
        "subdivision is admissible again and matches the stored per-chart table, and the "
        "level-0 subdivision is the plain one";
    GeneralPoint c = GeneralPoint::of({Rational(1, 3), Rational(1, 4)});
    try {
        Cycle closure = corpus_cycle(o, "graph-demo");
        Tower tower = corpus_tower(o, "demo-corner");

        AdmissibilityWitness w = is_admissible(closure);
        rep.add("the closure fails admissibility at the corner face",
                !w.ok && w.detail.find("{y1=0, y2=0}") != std::string::npos, w.detail);

        Cycle zu = localize(closure, {Polynomial::parse(closure.context().vars(), "x1")});
        AdmissibilityWitness wu = is_admissible(zu);
        rep.add("the restriction off x1 = 0 is admissible", wu.ok, wu.detail);

        LevelSubdivision lo = sd_level(closure, build_tower(2, {}), c);
        rep.add("the level-0 subdivision of the closure keeps the corner defect",
                !lo.admissible.ok &&
                    lo.admissible.detail.find("{y1=0, y2=0}") != std::string::npos,
                lo.admissible.detail);

        LevelSubdivision hi = sd_level(closure, tower, c);
        rep.add("the level-1 subdivision of the closure is admissible",
                hi.admissible.ok && hi.cycle.components().size() == 5, hi.admissible.detail);

        Fixture table = load_fixture(o.corpus + "/oracle/demo-level-charts.json");
        SignedRationalMapSum maps = phi_component_maps(tower, c);
        const auto& vertices = tower.top().vertices;
        for (const auto& entry : table.payload.at("charts")) {
            std::string vname = entry.at("vertex").get<std::string>();
            std::string nm = "chart table: " + vname;
            const SignedMapTerm* term = nullptr;
            for (const auto& t : maps.terms)
                if (vertices[t.vertex].name == vname) term = &t;
            if (!term) {
                rep.add(nm, false, "no component map at this vertex");
                continue;
            }
            std::vector<Polynomial> gens;
            for (const auto& g : entry.at("generators"))
                gens.push_back(Polynomial::parse(closure.context().vars(), g.get<std::string>()));
            Cycle expected = build_cycle(closure.context(), 0, {{1, gens, true}});
            Cycle got = strict_transform(closure, term->map, 1);
            bool ok = got.equals(expected) && term->sign == entry.at("sign").get<int>();
            rep.add(nm, ok, ok ? "" : forms(got, expected));
        }

        for (const auto& id : kNormalizedIds) {
            Cycle Z = corpus_cycle(o, id);
            GeneralPoint cz = sample_general_position(Z, o.seed + 21, 200);
            Cycle plain = cubical_subdivision(Z, cz, SubdivisionForm::Iterated);
            Cycle lvl0 = sd_level(Z, build_tower(Z.cube_dim(), {}), cz).cycle;
            rep.add("level 0 equals the plain subdivision: " + id, lvl0.equals(plain),
                    lvl0.equals(plain) ? "" : forms(lvl0, plain));
        }
        GeneralPoint cu = sample_general_position(zu, o.seed + 23, 200);
        Cycle plain_u = cubical_subdivision(zu, cu, SubdivisionForm::Iterated);
        Cycle lvl0_u = sd_level(zu, build_tower(2, {}), cu).cycle;
        rep.add("level 0 equals the plain subdivision: restricted demo cycle",
                lvl0_u.equals(plain_u), lvl0_u.equals(plain_u) ? "" : forms(lvl0_u, plain_u));

        Cycle sq = corpus_cycle(o, "point-square");
        H0Certificate cert = homotopy_h0(
            sq, tower, GeneralPoint::of({Rational(1, 3), Rational(1, 4), Rational(1, 5)}));
        rep.add("homotopy certificate over the demo tower (normalized fixture)", cert.pass,
                cert.pass ? "" : forms(cert.lhs, cert.rhs));
    } catch (const std::exception& e) {
        rep.add("demo pipeline", false, e.what());
    }
    return rep;
}

}  // namespace

const std::vector<SuiteSpec>& suite_registry() {
    static const std::vector<SuiteSpec> specs = {
        {"eta-table",
         "the eight boundary identities of the interpolation maps eta_c^0 and eta_c^1, with "
         "the scalar symbolic",
         suite_eta},
        {"h-faces",
         "the five-case face table of the homotopy maps on cubes of dimension up to the "
         "bound, all slots and signs, parameters symbolic",
         suite_h_faces},
        {"bidiv-homotopy",
         "boundary(phi_{c,i}(Z)) = Z - delta_{c_i,i}(Z) on the normalized fixture corpus at "
         "sampled general scalars",
         suite_bidiv_homotopy},
        {"delta-preserves-normal",
         "the bi-division of a normalized cycle has vanishing codimension-1 faces",
         suite_delta_normal},
        {"sd-two-forms",
         "the iterated and the vertex-sum forms of the cubical subdivision agree on the "
         "fixture corpus",
         suite_sd_two_forms},
        {"sd-chain",
         "boundary(phi_n(Z)) = Z - sd_c(Z) via the telescoping homotopy chain on the "
         "fixture corpus",
         suite_sd_chain},
        {"boundary-squared",
         "boundary composed with boundary vanishes on seeded random admissible linear "
         "cycles",
         suite_boundary_squared},
        {"involution-admissible",
         "the j-th involution swaps the direction-j faces and preserves admissibility",
         suite_involution},
        {"signs-recurrence",
         "tower vertex signs anchor at corner parity and propagate consistently along "
         "every edge",
         suite_signs},
        {"mv-exactness",
         "the two-open section sequence is exact on the sample corpus and the "
         "kernel-intersection law holds on randomized supports",
         suite_mv},
        {"h0-boundary",
         "the level homotopy's boundary telescopes the level subdivision against the "
         "level-0 subdivision on normalized fixtures",
         suite_h0},
        {"localization-demo",
         "the corner tower repairs the demo cycle's closure: inadmissible at the corner at "
         "level 0, admissible at level 1, per-chart transforms as stored",
         suite_localization},
    };
    return specs;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : suite_registry()) names.push_back(s.name);
    return names;
}

const SuiteSpec* find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return &s;
    return nullptr;
}

SuiteReport run_suite(const SuiteSpec& spec, const SuiteOptions& opts) {
    if (spec.statement.empty())
        throw std::logic_error("suite '" + spec.name + "' is missing its statement anchor");
    auto t0 = Clock::now();
    SuiteReport rep = spec.run(opts);
    rep.suite = spec.name;
    if (rep.statement.empty()) rep.statement = spec.statement;
    if (rep.checks.empty()) rep.add("suite produced no checks", false, "empty report");
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    const SuiteSpec* spec = find_suite(name);
    if (!spec) throw std::invalid_argument("unknown suite: " + name);
    return run_suite(*spec, opts);
}

}  // namespace chow
