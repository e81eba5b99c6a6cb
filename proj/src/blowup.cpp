#include "chowlab/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "chowlab/groebner.hpp"

namespace chow {

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

int index_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : (int)(it - v.begin());
}

RationalFunction rf_subst(const RationalFunction& f, const CtxPtr& dst,
                          const std::vector<std::optional<RationalFunction>>& vals) {
    return f.num().substituted(dst, vals) / f.den().substituted(dst, vals);
}

// Slot permutation between two charts sharing all but one incident divisor:
// matched slots go id-to-id, the two leftover slots pair up.
std::vector<int> chart_match(const VertexChart& a, const VertexChart& b,
                             const std::vector<int>& common) {
    int n = (int)a.incident.size();
    std::vector<int> g(n, -1);
    for (int p = 0; p < n; ++p) {
        int q = contains(common, a.incident[p]) ? index_of(b.incident, a.incident[p]) : -1;
        if (q < 0)
            for (int k = 0; k < n; ++k)
                if (!contains(common, b.incident[k])) q = k;
        g[p] = q;
    }
    std::vector<char> seen(n, 0);
    for (int q : g) {
        if (q < 0 || seen[q]) throw std::logic_error("edge permutation is not a bijection");
        seen[q] = 1;
    }
    return g;
}

void verify_charts(const DistinguishedSpace& S) {
    const CtxPtr& ctx = S.ctx;
    int n = S.dims;
    for (const auto& v : S.vertices) {
        if ((int)v.incident.size() != n || (int)v.forward.size() != n ||
            (int)v.inverse.size() != n)
            throw std::logic_error("chart slot count mismatch at " + v.name);
        if (!std::is_sorted(v.incident.begin(), v.incident.end()))
            throw std::logic_error("chart slots out of divisor order at " + v.name);
        std::vector<std::optional<RationalFunction>> inv_vals(ctx->total());
        std::vector<std::optional<RationalFunction>> fwd_vals(ctx->total());
        for (int j = 0; j < n; ++j) {
            inv_vals[ctx->cube_index(j)] = v.inverse[j];
            fwd_vals[ctx->cube_index(j)] = v.forward[j];
        }
        for (int k = 0; k < n; ++k) {
            RationalFunction u = RationalFunction::variable(ctx, ctx->cube_index(k));
            if (!rf_subst(v.forward[k], ctx, inv_vals).equals(u) ||
                !rf_subst(v.inverse[k], ctx, fwd_vals).equals(u))
                throw std::logic_error("chart inverse fails at " + v.name);
        }
    }
}

// Rebuild the face lattice and edge list from vertex incidence. Every
// nonempty face of the space contains a vertex, so the subsets of the
// vertices' incident sets enumerate exactly the nonempty faces.
void finalize(DistinguishedSpace& S) {
    int n = S.dims;
    std::set<std::vector<int>> faces;
    for (const auto& v : S.vertices) {
        int m = (int)v.incident.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> f;
            for (int j = 0; j < m; ++j)
                if (mask & (1u << j)) f.push_back(v.incident[j]);
            faces.insert(std::move(f));
        }
    }
    S.faces.assign(faces.begin(), faces.end());
    std::sort(S.faces.begin(), S.faces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    S.edges.clear();
    for (const auto& f : S.faces) {
        if ((int)f.size() != n - 1) continue;
        std::vector<int> at;
        for (int i = 0; i < (int)S.vertices.size(); ++i) {
            bool all = true;
            for (int id : f) all = all && contains(S.vertices[i].incident, id);
            if (all) at.push_back(i);
        }
        if (at.size() != 2) {
            std::string ids;
            for (int id : f) ids += (ids.empty() ? "" : ",") + std::to_string(id);
            throw std::logic_error("edge {" + ids + "} has " + std::to_string(at.size()) +
                                   " vertices, expected 2");
        }
        S.edges.push_back(
            {f, at[0], at[1], chart_match(S.vertices[at[0]], S.vertices[at[1]], f)});
    }
    verify_charts(S);
}

}  // namespace

std::string DivisorInfo::str() const {
    if (exceptional)
        return "E" + std::to_string(id) + " (step " + std::to_string(step) + ")";
    return "D" + std::to_string(id) + " {y" + std::to_string(coord) + "=" +
           std::to_string(eps) + "}";
}

int permutation_sign(const std::vector<int>& perm) {
    int s = 1;
    for (int i = 0; i < (int)perm.size(); ++i)
        for (int j = i + 1; j < (int)perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

bool DistinguishedSpace::has_face(const std::vector<int>& ids) const {
    std::vector<int> f = ids;
    std::sort(f.begin(), f.end());
    return std::find(faces.begin(), faces.end(), f) != faces.end();
}

int DistinguishedSpace::find_vertex(const std::vector<int>& ids) const {
    std::vector<int> f = ids;
    std::sort(f.begin(), f.end());
    for (int i = 0; i < (int)vertices.size(); ++i)
        if (vertices[i].incident == f) return i;
    return -1;
}

DistinguishedSpace initial_space(int n) {
    if (n < 1) throw std::invalid_argument("initial space needs n >= 1");
    DistinguishedSpace S;
    S.level = 0;
    S.dims = n;
    S.ctx = CubeMorphism::cube_ctx(n);
    for (int k = 1; k <= n; ++k) {
        S.divisors.push_back({2 * k - 1, false, k, 1, 0});
        S.divisors.push_back({2 * k, false, k, 0, 0});
    }
    int next_id = 0;
    for (const Vertex& v : cube_vertices(n)) {
        VertexChart ch;
        ch.id = next_id++;
        ch.name = v.str();
        ch.corner = v;
        for (int i = 0; i < n; ++i) {
            RationalFunction y = RationalFunction::variable(S.ctx, S.ctx->cube_index(i));
            if (v.coords[i] == 1) {
                ch.incident.push_back(2 * (i + 1) - 1);
                RationalFunction one = RationalFunction::constant(S.ctx, Rational(1));
                ch.forward.push_back(one - y);
                ch.inverse.push_back(one - y);
            } else {
                ch.incident.push_back(2 * (i + 1));
                ch.forward.push_back(y);
                ch.inverse.push_back(y);
            }
        }
        S.vertices.push_back(std::move(ch));
    }
    finalize(S);
    return S;
}

DistinguishedSpace blow_up_face(const DistinguishedSpace& space, std::vector<int> face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    if (face.empty() || !space.has_face(face)) {
        std::string ids;
        for (int id : face) ids += (ids.empty() ? "" : ",") + std::to_string(id);
        throw std::invalid_argument("not a face: {" + ids + "}");
    }
    if ((int)face.size() < 2) throw std::invalid_argument("codimension < 2");

    int n = space.dims;
    const CtxPtr& ctx = space.ctx;
    DistinguishedSpace T;
    T.level = space.level + 1;
    T.dims = n;
    T.ctx = ctx;
    T.divisors = space.divisors;
    int eid = (int)space.divisors.size() + 1;
    T.divisors.push_back({eid, true, 0, 0, T.level});

    int next_id = 0;
    for (const auto& w : space.vertices) {
        std::vector<int> J;
        for (int j = 0; j < n; ++j)
            if (contains(face, w.incident[j])) J.push_back(j);
        if ((int)J.size() < (int)face.size()) {
            VertexChart kept = w;
            kept.id = next_id++;
            T.vertices.push_back(std::move(kept));
            continue;
        }
        // The vertex lies on the center: one new vertex per center slot i.
        // Slot i now cuts the exceptional divisor; the other center slots
        // divide by slot i and keep their divisors as strict transforms.
        for (int i : J) {
            std::vector<int> raw_ids(n);
            std::vector<RationalFunction> raw_fwd;
            for (int j = 0; j < n; ++j) {
                if (j == i) {
                    raw_ids[j] = eid;
                    raw_fwd.push_back(w.forward[j]);
                } else if (contains(J, j)) {
                    raw_ids[j] = w.incident[j];
                    raw_fwd.push_back(w.forward[j] / w.forward[i]);
                } else {
                    raw_ids[j] = w.incident[j];
                    raw_fwd.push_back(w.forward[j]);
                }
            }
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return raw_ids[a] < raw_ids[b]; });
            std::vector<int> pos(n);  // raw slot -> sorted position
            for (int k = 0; k < n; ++k) pos[order[k]] = k;

            VertexChart v;
            v.id = next_id++;
            v.name = w.name + "-D" + std::to_string(w.incident[i]) + "+E" + std::to_string(eid);
            v.corner = std::nullopt;
            for (int k = 0; k < n; ++k) {
                v.incident.push_back(raw_ids[order[k]]);
                v.forward.push_back(raw_fwd[order[k]]);
            }
            // Old chart values in the new ones: raw slot j reads the value in
            // its sorted position, times the slot-i value on divided slots.
            std::vector<std::optional<RationalFunction>> vals(ctx->total());
            for (int j = 0; j < n; ++j) {
                RationalFunction e =
                    RationalFunction::variable(ctx, ctx->cube_index(pos[j]));
                if (contains(J, j) && j != i)
                    e = e * RationalFunction::variable(ctx, ctx->cube_index(pos[i]));
                vals[ctx->cube_index(j)] = e;
            }
            for (int k = 0; k < n; ++k) v.inverse.push_back(rf_subst(w.inverse[k], ctx, vals));
            T.vertices.push_back(std::move(v));
        }
    }
    finalize(T);
    return T;
}

std::vector<int> edge_permutation(const DistinguishedSpace& space, int v, int w) {
    if (v < 0 || w < 0 || v >= (int)space.vertices.size() || w >= (int)space.vertices.size())
        throw std::invalid_argument("vertex index out of range");
    for (const auto& e : space.edges) {
        if (e.v == v && e.w == w) return e.perm;
        if (e.v == w && e.w == v) {
            std::vector<int> inv(e.perm.size());
            for (int p = 0; p < (int)e.perm.size(); ++p) inv[e.perm[p]] = p;
            return inv;
        }
    }
    throw std::invalid_argument("not adjacent: " + space.vertices[v].name + " and " +
                                space.vertices[w].name);
}

std::vector<int> vertex_signs(const DistinguishedSpace& space) {
    int nv = (int)space.vertices.size();
    std::vector<int> sign(nv, 0);
    std::queue<int> q;
    for (int i = 0; i < nv; ++i)
        if (space.vertices[i].corner) {
            sign[i] = vertex_sign(*space.vertices[i].corner);
            q.push(i);
        }
    if (q.empty()) throw std::runtime_error("no anchor vertex");

    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (const auto& e : space.edges) {
        int s = permutation_sign(e.perm);
        adj[e.v].push_back({e.w, s});
        adj[e.w].push_back({e.v, s});
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, s] : adj[v]) {
            int want = -s * sign[v];
            if (sign[w] == 0) {
                sign[w] = want;
                q.push(w);
            }
        }
    }
    for (int i = 0; i < nv; ++i)
        if (sign[i] == 0)
            throw std::runtime_error("no anchor vertex reaches " + space.vertices[i].name);
    for (const auto& e : space.edges)
        if (sign[e.v] != -permutation_sign(e.perm) * sign[e.w])
            throw std::runtime_error("inconsistent signs across edge " +
                                     space.vertices[e.v].name + " / " +
                                     space.vertices[e.w].name);
    return sign;
}

Tower build_tower(int n, const std::vector<std::vector<int>>& steps) {
    Tower t;
    t.dims = n;
    t.steps = steps;
    t.spaces.push_back(initial_space(n));
    for (const auto& f : steps) t.spaces.push_back(blow_up_face(t.spaces.back(), f));
    return t;
}

Tower homotopy_tower(const Tower& tower) {
    int n = tower.dims;
    std::vector<std::vector<int>> steps;
    for (const auto& f : tower.steps) {
        std::vector<int> g;
        for (int id : f) g.push_back(id <= 2 * n ? id : id + 2);
        g.push_back(2 * n + 1);
        std::sort(g.begin(), g.end());
        steps.push_back(std::move(g));
    }
    return build_tower(n + 1, steps);
}

SignedRationalMapSum phi_component_maps(const Tower& tower, const GeneralPoint& c) {
    const DistinguishedSpace& S = tower.top();
    int n = S.dims;
    if ((int)c.size() != n)
        throw std::invalid_argument("parameter point has " + std::to_string(c.size()) +
                                    " coordinates, the tower cube has " + std::to_string(n));
    std::vector<int> sign = vertex_signs(S);
    const CtxPtr& ctx = S.ctx;

    SignedRationalMapSum sum;
    for (int vi = 0; vi < (int)S.vertices.size(); ++vi) {
        const auto& v = S.vertices[vi];
        std::vector<Rational> t;
        for (const auto& f : v.forward) {
            Rational dn = evaluate_polynomial(f.den(), c.values);
            if (dn.is_zero())
                throw std::runtime_error("parameter on divisor image at " + v.name);
            Rational nm = evaluate_polynomial(f.num(), c.values);
            if (nm.is_zero())
                throw std::runtime_error("parameter on divisor image at " + v.name);
            t.push_back(nm / dn);
        }
        // the chart inverse composed with the slotwise scaling u_j -> u_j f_j(c)
        std::vector<std::optional<RationalFunction>> vals(ctx->total());
        for (int j = 0; j < n; ++j)
            vals[ctx->cube_index(j)] =
                RationalFunction::variable(ctx, ctx->cube_index(j)) *
                RationalFunction::constant(ctx, t[j]);
        std::vector<RationalFunction> coords;
        for (int k = 0; k < n; ++k) coords.push_back(rf_subst(v.inverse[k], ctx, vals));
        sum.terms.push_back({sign[vi], CubeMorphism(ctx, ctx, std::move(coords)), v.id});
    }
    return sum;
}

Cycle strict_transform(const Cycle& Z, const CubeMorphism& map, long long sign) {
    if (map.target()->n_cube() != Z.cube_dim())
        throw std::invalid_argument("strict transform: map target does not match the cycle's cube");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("strict transform: sign must be +1 or -1");

    int n_src = map.source()->n_cube();
    const CtxPtr& sv = Z.context().vars();

    std::vector<std::string> params = sv->params;
    for (const auto& p : map.source()->params)
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    AmbientContext dst =
        AmbientContext::make(Z.context().ambient_dim(), n_src, params, Z.context().open_units());
    const CtxPtr& dv = dst.vars();

    std::vector<std::optional<RationalFunction>> values(sv->total());
    for (int k = 0; k < Z.cube_dim(); ++k)
        values[sv->cube_index(k)] = map.coords()[k].embedded(dv);

    // Everything over the target facets or the indeterminacy locus is cut
    // away: saturate by each coordinate's denominator and by the cleared
    // equations of both facets in each target direction.
    std::vector<Polynomial> sat;
    RationalFunction one = RationalFunction::constant(dv, Rational(1));
    for (const auto& co : map.coords()) {
        RationalFunction e = co.embedded(dv);
        for (Polynomial p : {e.den(), e.num(), (one - e).num()}) {
            auto cv = p.constant_value();
            if (cv && cv->is_zero())
                throw std::runtime_error("component collapses: the map lands in a facet");
            if (!cv) sat.push_back(std::move(p));
        }
    }

    int d_out = Z.d() + Z.cube_dim() - n_src;
    std::vector<std::tuple<long long, std::vector<Polynomial>, bool>> parts;
    int k = 0;
    for (const auto& comp : Z.components()) {
        ++k;
        std::vector<Polynomial> gens;
        gens.reserve(comp.ideal.gens().size());
        for (const auto& g : comp.ideal.gens())
            gens.push_back(g.substituted(dv, values).num());
        Ideal J(dv, std::move(gens));
        for (const auto& s : sat) J = saturation(J, s);
        if (is_unit_ideal(J))
            throw std::runtime_error("component collapses: component " + std::to_string(k) +
                                     " [" + comp.key + "] lies over the removed locus");
        parts.emplace_back(sign * comp.coef, J.default_basis(), comp.irreducible);
    }
    return build_cycle(dst, d_out, parts);
}

Cycle cylinder(const Cycle& Z) {
    AmbientContext dst =
        AmbientContext::make(Z.context().ambient_dim(), Z.cube_dim() + 1,
                             Z.context().vars()->params, Z.context().open_units());
    std::vector<std::tuple<long long, std::vector<Polynomial>, bool>> parts;
    for (const auto& comp : Z.components())
        parts.emplace_back(comp.coef, comp.ideal.gens(), comp.irreducible);
    return build_cycle(dst, Z.d(), parts);
}

LevelSubdivision sd_level(const Cycle& Z, const Tower& tower, const GeneralPoint& c) {
    if (tower.dims != Z.cube_dim())
        throw std::invalid_argument("level subdivision: tower does not match the cycle's cube");
    const CtxPtr& v = Z.context().vars();
    int k = 0;
    for (const auto& comp : Z.components()) {
        ++k;
        for (int j = 0; j < Z.cube_dim(); ++j) {
            Polynomial y = Polynomial::variable(v, v->cube_index(j));
            Polynomial ym1 = y - Polynomial::constant(v, Rational(1));
            if (vanishes_on(comp.ideal, y) || vanishes_on(comp.ideal, ym1))
                throw std::invalid_argument("component " + std::to_string(k) + " [" + comp.key +
                                            "] lies in a distinguished divisor");
        }
    }

    SignedRationalMapSum maps = phi_component_maps(tower, c);
    std::optional<Cycle> acc;
    for (const auto& t : maps.terms) {
        Cycle part = strict_transform(Z, t.map, t.sign);
        acc = acc ? *acc + part : part;
    }
    AdmissibilityWitness adm = is_admissible(*acc);
    return {std::move(*acc), std::move(adm)};
}

H0Certificate homotopy_h0(const Cycle& Z, const Tower& tower, const GeneralPoint& cprime) {
    int n = tower.dims;
    if (Z.cube_dim() != n)
        throw std::invalid_argument("homotopy: tower does not match the cycle's cube");
    if ((int)cprime.size() != n + 1)
        throw std::invalid_argument("homotopy: parameter point needs " + std::to_string(n + 1) +
                                    " coordinates");

    GeneralPoint c =
        GeneralPoint::of(std::vector<Rational>(cprime.values.begin(), cprime.values.end() - 1));
    LevelSubdivision hi = sd_level(Z, tower, c);
    if (!hi.admissible.ok)
        throw std::runtime_error("non-general parameter (level subdivision): " +
                                 hi.admissible.detail);
    LevelSubdivision lo = sd_level(Z, build_tower(n, {}), c);
    if (!lo.admissible.ok)
        throw std::runtime_error("non-general parameter (level-0 subdivision): " +
                                 lo.admissible.detail);

    Tower T = homotopy_tower(tower);
    Cycle prZ = cylinder(Z);
    SignedRationalMapSum maps = phi_component_maps(T, cprime);
    std::optional<Cycle> acc;
    for (const auto& t : maps.terms) {
        Cycle part = strict_transform(prZ, t.map, t.sign);
        acc = acc ? *acc + part : part;
    }
    // The comparison faces sit in the last cube direction, which the boundary
    // operator weights by (-1)^(n+1); orient H so both sides match on the nose.
    Cycle H = acc->scaled((n + 1) % 2 == 0 ? 1 : -1);
    AdmissibilityWitness hw = is_admissible(H);
    if (!hw.ok)
        throw std::runtime_error("non-general parameter (homotopy cycle): " + hw.detail);

    Cycle lhs = boundary_nondegenerate(H);
    Cycle rhs = kill_degenerates(hi.cycle - lo.cycle);
    bool ok = lhs.equals(rhs);
    return {std::move(H), std::move(lhs), std::move(rhs), ok};
}

}  // namespace chow
