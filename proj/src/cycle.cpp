#include "chowlab/cycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chow {

namespace {

Ideal saturate_by_units(Ideal J, const AmbientContext& actx) {
    for (const auto& u : actx.open_units()) J = saturation(J, u.embedded(J.ctx()));
    return J;
}

bool basis_uses_params(const Ideal& J) {
    const auto& ctx = *J.ctx();
    for (const auto& g : J.default_basis())
        for (int k = ctx.n_main(); k < ctx.total(); ++k)
            if (g.depends_on(k)) return true;
    return false;
}

std::string join_strings(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    return out;
}

CycleComponent make_component(Ideal J, long long coef, int dim, bool irr) {
    CycleComponent c;
    c.key = join_strings(J.canonical_strings());
    c.ideal = std::move(J);
    c.coef = coef;
    c.dim = dim;
    c.irreducible = irr;
    return c;
}

// Saturate along the open units, then decide what the ideal contributes as a
// cycle component of the expected dimension. Empty contributions return
// nullopt. Reduced ideals carry multiplicity one; zero-dimensional
// parameter-free ideals contribute their radical with multiplicity
// length/(radical length) when that is exact; everything else is rejected.
std::optional<std::pair<Ideal, long long>> settle_component(const AmbientContext& actx, Ideal J,
                                                            int expected_dim,
                                                            const std::string& dim_error_label,
                                                            const std::string& where) {
    J = saturate_by_units(std::move(J), actx);
    if (is_unit_ideal(J)) return std::nullopt;
    auto dim = dimension(J);
    if (!dim) return std::nullopt;
    if (*dim != expected_dim)
        throw std::runtime_error(dim_error_label + ": " + where + " has dimension " +
                                 std::to_string(*dim) + ", expected " +
                                 std::to_string(expected_dim));
    if (certify_reduced(J) == ReducedCert::Reduced) return std::make_pair(std::move(J), 1LL);
    if (expected_dim == 0 && !basis_uses_params(J)) {
        uint64_t length = quotient_length(J);
        Ideal R = radical_zero_dimensional(J);
        uint64_t rad_length = quotient_length(R);
        if (rad_length > 0 && length % rad_length == 0)
            return std::make_pair(std::move(R), (long long)(length / rad_length));
    }
    throw std::runtime_error("unsupported multiplicity: " + where +
                             " is neither certified reduced nor of equal local lengths");
}

std::string face_label(const std::vector<std::pair<int, int>>& assignment) {
    std::string s = "{";
    for (size_t i = 0; i < assignment.size(); ++i) {
        if (i) s += ", ";
        s += "y" + std::to_string(assignment[i].first) + "=" + std::to_string(assignment[i].second);
    }
    return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// AmbientContext

AmbientContext AmbientContext::make(int m, int n, std::vector<std::string> params,
                                    std::vector<Polynomial> open_units) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative dimension");
    AmbientContext a;
    a.vars_ = VarContext::ambient_cube(m, n, std::move(params));
    for (auto& u : open_units) {
        Polynomial e = u.embedded(a.vars_);
        if (e.is_zero() || e.is_constant())
            throw std::invalid_argument("open unit must be nonconstant");
        for (int k = 0; k < a.vars_->total(); ++k)
            if (a.vars_->is_cube_index(k) && e.depends_on(k))
                throw std::invalid_argument("open unit depends on a cube variable");
        a.units_.push_back(std::move(e));
    }
    return a;
}

AmbientContext AmbientContext::with_cube(int n) const {
    return make(ambient_dim(), n, vars_->params, units_);
}

AmbientContext AmbientContext::with_units(std::vector<Polynomial> more) const {
    std::vector<Polynomial> all = units_;
    for (auto& u : more) all.push_back(std::move(u));
    return make(ambient_dim(), cube_dim(), vars_->params, std::move(all));
}

AmbientContext AmbientContext::without_units() const {
    return make(ambient_dim(), cube_dim(), vars_->params, {});
}

bool AmbientContext::same(const AmbientContext& o) const {
    if (!vars_ || !o.vars_) return vars_ == o.vars_;
    if (!vars_->same_names(*o.vars_)) return false;
    if (units_.size() != o.units_.size()) return false;
    for (size_t i = 0; i < units_.size(); ++i)
        if (!(units_[i] == o.units_[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Cycle

void Cycle::insert(CycleComponent c) {
    if (c.coef == 0) return;
    for (auto& e : comps_) {
        if (e.key == c.key) {
            e.coef += c.coef;
            e.irreducible = e.irreducible || c.irreducible;
            return;
        }
    }
    comps_.push_back(std::move(c));
}

void Cycle::canonicalize() {
    comps_.erase(std::remove_if(comps_.begin(), comps_.end(),
                                [](const CycleComponent& c) { return c.coef == 0; }),
                 comps_.end());
    std::sort(comps_.begin(), comps_.end(),
              [](const CycleComponent& a, const CycleComponent& b) { return a.key < b.key; });
}

Cycle Cycle::negated() const { return scaled(-1); }

Cycle Cycle::scaled(long long k) const {
    Cycle r(actx_, d_);
    if (k == 0) return r;
    r.comps_ = comps_;
    for (auto& c : r.comps_) c.coef *= k;
    return r;
}

Cycle Cycle::operator+(const Cycle& o) const {
    if (!actx_.same(o.actx_) || d_ != o.d_)
        throw std::invalid_argument("cycle addition across different contexts");
    Cycle r = *this;
    for (const auto& c : o.comps_) r.insert(c);
    r.canonicalize();
    return r;
}

Cycle Cycle::operator-(const Cycle& o) const { return *this + o.negated(); }

bool Cycle::equals(const Cycle& o) const {
    if (!actx_.same(o.actx_) || d_ != o.d_) return false;
    if (comps_.size() != o.comps_.size()) return false;
    for (size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i].key != o.comps_[i].key || comps_[i].coef != o.comps_[i].coef) return false;
    return true;
}

std::string Cycle::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& c : comps_) {
        long long k = c.coef;
        if (first) {
            if (k < 0) out << "-";
        } else {
            out << (k < 0 ? " - " : " + ");
        }
        first = false;
        long long a = k < 0 ? -k : k;
        if (a != 1) out << a << "*";
        out << "[" << c.key << "]";
    }
    return out.str();
}

Cycle build_cycle(const AmbientContext& actx, int d,
                  const std::vector<std::tuple<long long, std::vector<Polynomial>, bool>>& parts) {
    Cycle Z(actx, d);
    int expected = d + actx.cube_dim();
    for (const auto& [coef, gens, irr] : parts) {
        if (coef == 0) continue;
        std::vector<Polynomial> embedded;
        embedded.reserve(gens.size());
        for (const auto& g : gens) embedded.push_back(g.embedded(actx.vars()));
        Ideal J = saturate_by_units(Ideal(actx.vars(), std::move(embedded)), actx);
        auto dim = dimension(J);
        if (!dim)
            throw std::runtime_error("dimension mismatch: component is empty over the ambient");
        if (*dim != expected)
            throw std::runtime_error("dimension mismatch: component has dimension " +
                                     std::to_string(*dim) + ", cycle requires " +
                                     std::to_string(expected));
        Z.insert(make_component(std::move(J), coef, expected, irr));
    }
    Z.canonicalize();
    return Z;
}

// ---------------------------------------------------------------------------
// Faces and boundary

Cycle face(const Cycle& Z, int i, int eps) {
    int n = Z.cube_dim();
    if (i < 1 || i > n) throw std::invalid_argument("face index out of range");
    if (eps != 0 && eps != 1) throw std::invalid_argument("face value must be 0 or 1");

    AmbientContext dst = Z.context().with_cube(n - 1);
    const CtxPtr& sv = Z.context().vars();
    const CtxPtr& dv = dst.vars();

    // y_i goes to the constant; later cube variables shift down one name.
    std::vector<std::optional<RationalFunction>> values(sv->total());
    values[sv->cube_index(i - 1)] = RationalFunction::constant(dv, Rational(eps));
    for (int k = i; k < n; ++k)
        values[sv->cube_index(k)] = RationalFunction::variable(dv, dv->cube_index(k - 1));

    Cycle R(dst, Z.d());
    int expected = Z.d() + n - 1;
    std::string where = "face {y" + std::to_string(i) + "=" + std::to_string(eps) + "}";
    for (const auto& comp : Z.components()) {
        std::vector<Polynomial> gens;
        gens.reserve(comp.ideal.gens().size());
        for (const auto& g : comp.ideal.gens())
            gens.push_back(g.substituted(dv, values).as_polynomial());
        auto settled = settle_component(dst, Ideal(dv, std::move(gens)), expected,
                                        "improper face", where + " of [" + comp.key + "]");
        if (!settled) continue;
        R.insert(make_component(std::move(settled->first), comp.coef * settled->second, expected,
                                false));
    }
    R.canonicalize();
    return R;
}

Cycle boundary(const Cycle& Z) {
    int n = Z.cube_dim();
    if (n == 0) throw std::invalid_argument("boundary needs at least one cube factor");
    Cycle R(Z.context().with_cube(n - 1), Z.d());
    for (int i = 1; i <= n; ++i) {
        long long s = (i % 2 == 0) ? 1 : -1;
        R = R + face(Z, i, 1).scaled(s) + face(Z, i, 0).scaled(-s);
    }
    return R;
}

Cycle boundary_nondegenerate(const Cycle& Z) { return kill_degenerates(boundary(Z)); }

// ---------------------------------------------------------------------------
// Admissibility

AdmissibilityWitness is_admissible(const Cycle& Z) {
    int n = Z.cube_dim();
    const auto& actx = Z.context();
    const CtxPtr& v = actx.vars();

    // Faces in order of increasing codimension; within one codimension the
    // variable subsets run lexicographically, the 0/1 assignments in binary
    // order with the last chosen variable moving fastest.
    for (size_t ci = 0; ci < Z.components().size(); ++ci) {
        const auto& comp = Z.components()[ci];
        for (int r = 1; r <= n; ++r) {
            std::vector<int> subset(r);
            std::function<std::optional<AdmissibilityWitness>(int, int)> walk =
                [&](int pos, int lo) -> std::optional<AdmissibilityWitness> {
                if (pos == r) {
                    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
                        std::vector<std::pair<int, int>> assignment;
                        std::vector<Polynomial> gens = comp.ideal.gens();
                        for (int b = 0; b < r; ++b) {
                            int val = (mask >> (r - 1 - b)) & 1u;
                            assignment.push_back({subset[b], val});
                            Polynomial eq = Polynomial::variable(v, v->cube_index(subset[b] - 1)) -
                                            Polynomial::constant(v, Rational(val));
                            gens.push_back(std::move(eq));
                        }
                        Ideal J = saturate_by_units(Ideal(v, std::move(gens)), actx);
                        auto dim = dimension(J);
                        int bound = Z.d() + n - r;
                        if (dim && *dim > bound) {
                            AdmissibilityWitness w;
                            w.ok = false;
                            w.detail = "component " + std::to_string(ci + 1) + " [" + comp.key +
                                       "] meets face " + face_label(assignment) + " in dimension " +
                                       std::to_string(*dim) + " > " + std::to_string(bound);
                            return w;
                        }
                    }
                    return std::nullopt;
                }
                for (int s = lo; s <= n; ++s) {
                    subset[pos] = s;
                    if (auto w = walk(pos + 1, s + 1)) return w;
                }
                return std::nullopt;
            };
            if (auto w = walk(0, 1)) return *w;
        }
    }
    return AdmissibilityWitness{};
}

// ---------------------------------------------------------------------------
// Degenerate components, normalization

bool is_degenerate(const CycleComponent& comp, const AmbientContext& actx) {
    int n = actx.cube_dim();
    const auto& basis = comp.ideal.default_basis();
    for (int j = 0; j < n; ++j) {
        int idx = actx.vars()->cube_index(j);
        bool free_of = true;
        for (const auto& g : basis) free_of = free_of && !g.depends_on(idx);
        if (free_of) return true;
    }
    return false;
}

Cycle kill_degenerates(const Cycle& Z) {
    Cycle r(Z.context(), Z.d());
    for (const auto& c : Z.components())
        if (!is_degenerate(c, Z.context())) r.insert(c);
    r.canonicalize();
    return r;
}

bool is_normalized(const Cycle& Z) {
    return is_normalized_mod(
        Z, [](const Cycle& F) { return kill_degenerates(F).is_zero(); });
}

bool is_normalized_mod(const Cycle& Z, const std::function<bool(const Cycle&)>& in_image) {
    for (int i = 1; i <= Z.cube_dim(); ++i)
        for (int eps = 0; eps <= 1; ++eps)
            if (!in_image(face(Z, i, eps))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Pullback

Cycle pullback(const Cycle& Z, const CubeMorphism& f) {
    if (f.target()->n_cube() != Z.cube_dim())
        throw std::invalid_argument("pullback: morphism target does not match the cycle's cube");
    for (const auto& c : f.coords())
        if (!c.is_polynomial())
            throw std::runtime_error(
                "unsupported morphism class: rational coordinates are outside the iso/flat "
                "classes");

    int n_src = f.source()->n_cube();
    const CtxPtr& sv = Z.context().vars();

    // Parameters of the cycle first, then any new ones the morphism carries.
    std::vector<std::string> params = sv->params;
    for (const auto& p : f.source()->params)
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    AmbientContext dst =
        AmbientContext::make(Z.context().ambient_dim(), n_src, params, Z.context().open_units());
    const CtxPtr& dv = dst.vars();

    std::vector<std::optional<RationalFunction>> values(sv->total());
    for (int k = 0; k < Z.cube_dim(); ++k)
        values[sv->cube_index(k)] = f.coords()[k].embedded(dv);

    Cycle R(dst, Z.d());
    int expected = Z.d() + n_src;
    for (const auto& comp : Z.components()) {
        std::vector<Polynomial> gens;
        gens.reserve(comp.ideal.gens().size());
        for (const auto& g : comp.ideal.gens())
            gens.push_back(g.substituted(dv, values).as_polynomial());
        auto settled = settle_component(dst, Ideal(dv, std::move(gens)), expected,
                                        "dimension mismatch", "pullback of [" + comp.key + "]");
        if (!settled) continue;
        R.insert(make_component(std::move(settled->first), comp.coef * settled->second, expected,
                                false));
    }
    R.canonicalize();
    return R;
}

// ---------------------------------------------------------------------------
// Support and open subsets

bool is_supported_in(const Cycle& Z, const Ideal& W) {
    const CtxPtr& v = Z.context().vars();
    std::vector<Polynomial> gens;
    for (const auto& g : W.gens()) gens.push_back(g.embedded(v));
    Ideal We(v, std::move(gens));
    for (const auto& comp : Z.components())
        if (!variety_contained(comp.ideal, We)) return false;
    return true;
}

Cycle restrict_to_open(const Cycle& Z, const Ideal& closed) {
    const CtxPtr& v = Z.context().vars();
    std::vector<Polynomial> gens;
    for (const auto& g : closed.gens()) gens.push_back(g.embedded(v));
    Ideal Ce(v, std::move(gens));
    Cycle r(Z.context(), Z.d());
    for (const auto& comp : Z.components())
        if (!variety_contained(comp.ideal, Ce)) r.insert(comp);
    r.canonicalize();
    return r;
}

Cycle closure_from_open(const Cycle& Z) {
    AmbientContext dst = Z.context().without_units();
    const CtxPtr& dv = dst.vars();
    Cycle r(dst, Z.d());
    for (const auto& comp : Z.components()) {
        for (const auto& u : Z.context().open_units())
            if (vanishes_on(comp.ideal, u))
                throw std::runtime_error("closure: component lies in the removed closed set");
        std::vector<Polynomial> gens;
        for (const auto& g : comp.ideal.gens()) gens.push_back(g.embedded(dv));
        r.insert(make_component(Ideal(dv, std::move(gens)), comp.coef, comp.dim,
                                comp.irreducible));
    }
    r.canonicalize();
    return r;
}

Cycle localize(const Cycle& Z, const std::vector<Polynomial>& units) {
    AmbientContext dst = Z.context().with_units(units);
    const CtxPtr& dv = dst.vars();
    Cycle r(dst, Z.d());
    int expected = Z.d() + Z.cube_dim();
    for (const auto& comp : Z.components()) {
        std::vector<Polynomial> gens;
        for (const auto& g : comp.ideal.gens()) gens.push_back(g.embedded(dv));
        Ideal J = saturate_by_units(Ideal(dv, std::move(gens)), dst);
        if (is_unit_ideal(J)) continue;  // component invisible on the open subset
        auto dim = dimension(J);
        if (!dim) continue;
        if (*dim != expected)
            throw std::runtime_error("dimension mismatch: localized component has dimension " +
                                     std::to_string(*dim) + ", cycle requires " +
                                     std::to_string(expected));
        r.insert(make_component(std::move(J), comp.coef, expected, comp.irreducible));
    }
    r.canonicalize();
    return r;
}

}  // namespace chow
