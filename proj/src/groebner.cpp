#include "chowlab/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chow {

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ctx()->same_names(*ctx_)) g = g.embedded(ctx_);
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order) const {
    auto key = order.key();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, reduced_groebner(gens_, order)).first;
    return it->second;
}

const std::vector<Polynomial>& Ideal::default_basis() const {
    return basis(MonomialOrder::grevlex(*ctx_));
}

Ideal Ideal::embedded(const CtxPtr& dst) const {
    std::vector<Polynomial> gs;
    for (const auto& g : gens_) gs.push_back(g.embedded(dst));
    return Ideal(dst, std::move(gs));
}

std::vector<std::string> Ideal::canonical_strings() const {
    MonomialOrder ord = MonomialOrder::grevlex(*ctx_);
    std::vector<std::string> out;
    for (const auto& g : default_basis()) out.push_back(g.primitive_normalized(ord).str(ord));
    return out;
}

// ---------------------------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    struct Head {
        Monomial lm;
        Rational lc;
        const Polynomial* g;
    };
    std::vector<Head> heads;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        auto [lm, lc] = g.leading_term(order);
        heads.push_back({lm, lc, &g});
    }
    Polynomial rem(f.ctx());
    Polynomial p = f;
    while (!p.is_zero()) {
        auto [pm, pc] = p.leading_term(order);
        bool reduced = false;
        for (const auto& h : heads) {
            if (!mono_divides(h.lm, pm)) continue;
            p -= h.g->term_multiplied(mono_div(pm, h.lm), pc / h.lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(pm, pc);
            Polynomial lead(p.ctx());
            lead.add_term(pm, pc);
            p -= lead;
        }
    }
    return rem;
}

std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const MonomialOrder& order) {
    std::vector<Polynomial> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(order));

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(g.leading_monomial(order));

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) pairs.push_back({i, k, mono_lcm(lms[i], lms[k])});
    };
    for (size_t k = 1; k < G.size(); ++k) push_pairs_for(k);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        if (mono_coprime(lms[p.i], lms[p.j])) continue;  // S-poly reduces to zero
        const Polynomial &f = G[p.i], &g = G[p.j];
        Polynomial s = f.term_multiplied(mono_div(p.lcm, lms[p.i]), Rational(1)) -
                       g.term_multiplied(mono_div(p.lcm, lms[p.j]), Rational(1));
        Polynomial r = normal_form(s, G, order);
        if (r.is_zero()) continue;
        G.push_back(r.monic(order));
        lms.push_back(G.back().leading_monomial(order));
        push_pairs_for(G.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element.
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (mono_divides(lms[j], lms[i]) && (lms[j] != lms[i] || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(G[i]);

    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.monic(order));
    }

    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    return reduced;
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
    MonomialOrder ord = MonomialOrder::grevlex(*I.ctx());
    Polynomial g = f.ctx()->same_names(*I.ctx()) ? f : f.embedded(I.ctx());
    return normal_form(g, I.default_basis(), ord).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!a.ctx()->same_names(*b.ctx())) return false;
    return a.default_basis() == b.default_basis();
}

namespace {

// Leading monomial restricted to main (non-parameter) variables.
Monomial main_part(const Monomial& m, const VarContext& ctx) {
    Monomial r = m;
    for (int i = ctx.n_main(); i < ctx.total(); ++i) r[i] = 0;
    return r;
}

bool main_part_trivial(const Monomial& m, const VarContext& ctx) {
    for (int i = 0; i < ctx.n_main(); ++i)
        if (m[i]) return false;
    return true;
}

}  // namespace

bool is_unit_ideal(const Ideal& I) {
    MonomialOrder ord = MonomialOrder::grevlex(*I.ctx());
    for (const auto& g : I.default_basis())
        if (main_part_trivial(g.leading_monomial(ord), *I.ctx())) return true;
    return false;
}

std::optional<int> dimension(const Ideal& I) {
    const auto& ctx = *I.ctx();
    MonomialOrder ord = MonomialOrder::grevlex(ctx);
    int geo = ctx.n_ambient() + ctx.n_cube();
    if (geo > 24) throw std::invalid_argument("dimension: too many variables");

    std::vector<Monomial> lms;
    for (const auto& g : I.default_basis()) {
        for (int a = 0; a < ctx.n_aux(); ++a)
            if (g.depends_on(ctx.aux_index(a)))
                throw std::invalid_argument("dimension: ideal involves auxiliary variables");
        Monomial mp = main_part(g.leading_monomial(ord), ctx);
        if (mono_is_one(mp)) return std::nullopt;  // unit over Q(params)
        lms.push_back(std::move(mp));
    }

    // Independent set: no leading monomial supported entirely inside S.
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << geo); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lm : lms) {
            bool inside = true;
            for (int v = 0; v < geo && inside; ++v)
                if (lm[v] && !(mask & (1u << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("saturation by zero");
    if (f.is_constant()) return I;
    CtxPtr ext = I.ctx()->with_aux("_t");
    int t = ext->aux_index(ext->n_aux() - 1);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.embedded(ext));
    Polynomial rel = Polynomial::constant(ext, Rational(1)) -
                     Polynomial::variable(ext, t) * f.embedded(ext);
    gens.push_back(rel);
    MonomialOrder ord = MonomialOrder::elimination(*ext, {t});
    std::vector<Polynomial> keep;
    for (const auto& g : reduced_groebner(gens, ord))
        if (!g.depends_on(t)) keep.push_back(g.embedded(I.ctx()));
    return Ideal(I.ctx(), std::move(keep));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
    MonomialOrder ord = MonomialOrder::elimination(*I.ctx(), vars);
    std::vector<Polynomial> keep;
    for (const auto& g : I.basis(ord)) {
        bool free = true;
        for (int v : vars) free = free && !g.depends_on(v);
        if (free) keep.push_back(g);
    }
    return Ideal(I.ctx(), std::move(keep));
}

bool vanishes_on(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) return true;
    CtxPtr ext = I.ctx()->with_aux("_t");
    int t = ext->aux_index(ext->n_aux() - 1);
    std::vector<Polynomial> gens;
    for (const auto& h : I.gens()) gens.push_back(h.embedded(ext));
    gens.push_back(Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, t) * g.embedded(ext));
    return is_unit_ideal(Ideal(ext, std::move(gens)));
}

bool variety_contained(const Ideal& inner, const Ideal& outer) {
    for (const auto& g : outer.gens())
        if (!vanishes_on(inner, g)) return false;
    return true;
}

uint64_t quotient_length(const Ideal& I) {
    const auto& ctx = *I.ctx();
    MonomialOrder ord = MonomialOrder::grevlex(ctx);
    for (const auto& g : I.default_basis())
        for (int k = ctx.n_main(); k < ctx.total(); ++k)
            if (g.depends_on(k))
                throw std::invalid_argument("length with parameters is not supported");
    int geo = ctx.n_ambient() + ctx.n_cube();

    std::vector<Monomial> lms;
    for (const auto& g : I.default_basis()) lms.push_back(g.leading_monomial(ord));
    for (const auto& lm : lms)
        if (mono_is_one(lm)) return 0;  // unit ideal, empty scheme

    // Zero-dimensionality: every variable needs a pure power among the
    // leading monomials; the minimal such power bounds the exponent box.
    std::vector<uint32_t> bound(ctx.total(), 0);
    for (int v = 0; v < geo; ++v) {
        uint32_t b = 0;
        for (const auto& lm : lms) {
            bool pure = lm[v] > 0;
            for (int w = 0; w < ctx.total() && pure; ++w)
                if (w != v && lm[w]) pure = false;
            if (pure) b = b ? std::min(b, lm[v]) : lm[v];
        }
        if (!b) throw std::invalid_argument("length of a positive-dimensional ideal");
        bound[v] = b;
    }

    uint64_t count = 0;
    Monomial m(ctx.total(), 0);
    std::function<void(int)> walk = [&](int v) {
        if (v == geo) {
            for (const auto& lm : lms)
                if (mono_divides(lm, m)) return;
            ++count;
            return;
        }
        for (uint32_t e = 0; e <= bound[v]; ++e) {
            m[v] = e;
            walk(v + 1);
        }
        m[v] = 0;
    };
    walk(0);
    return count;
}

// ---------------------------------------------------------------------------
// Univariate helpers.

namespace {

int single_support_var(const Polynomial& p) {
    auto vars = p.support_vars();
    if (vars.size() > 1)
        throw std::invalid_argument("expected a univariate polynomial, got " + p.str());
    return vars.empty() ? -1 : vars[0];
}

Polynomial univ_rem(Polynomial a, const Polynomial& b, int var) {
    uint32_t db = b.degree_in(var);
    Rational lb;
    for (const auto& [m, c] : b.terms())
        if (m[var] == db) lb = c;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        uint32_t da = a.degree_in(var);
        Rational la;
        for (const auto& [m, c] : a.terms())
            if (m[var] == da) la = c;
        Monomial shift(a.ctx()->total(), 0);
        shift[var] = da - db;
        a -= b.term_multiplied(shift, la / lb);
        if (!a.is_zero() && a.degree_in(var) == da) break;  // defensive; cannot happen
    }
    return a;
}

}  // namespace

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, int var) {
    Polynomial f = a, g = b;
    while (!g.is_zero()) {
        if (g.degree_in(var) == 0) {
            // nonzero constant: gcd is 1
            return Polynomial::constant(a.ctx(), Rational(1));
        }
        Polynomial r = univ_rem(f, g, var);
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    // monic in var
    uint32_t df = f.degree_in(var);
    Rational lf;
    for (const auto& [m, c] : f.terms())
        if (m[var] == df) lf = c;
    return f.scaled(lf.inv());
}

Polynomial squarefree_part(const Polynomial& f, int var) {
    if (f.is_zero() || f.degree_in(var) == 0) return f;
    Polynomial g = univariate_gcd(f, f.derivative(var), var);
    MonomialOrder ord = MonomialOrder::grevlex(*f.ctx());
    auto q = divide_exact(f, g, ord);
    if (!q) throw std::logic_error("squarefree part: non-exact division");
    return *q;
}

Ideal radical_zero_dimensional(const Ideal& I) {
    const auto& ctx = *I.ctx();
    for (const auto& g : I.gens())
        for (int k = ctx.n_main(); k < ctx.total(); ++k)
            if (g.depends_on(k))
                throw std::invalid_argument("radical with parameters is not supported");
    int geo = ctx.n_ambient() + ctx.n_cube();
    std::vector<Polynomial> gens = I.gens();
    for (int v = 0; v < geo; ++v) {
        std::vector<int> others;
        for (int w = 0; w < geo; ++w)
            if (w != v) others.push_back(w);
        Ideal univ = eliminate(I, others);
        Polynomial m(I.ctx());
        for (const auto& g : univ.gens()) {
            if (single_support_var(g) == -1) continue;
            m = m.is_zero() ? g : univariate_gcd(m, g, v);
        }
        if (m.is_zero())
            throw std::invalid_argument("radical: ideal is not zero-dimensional");
        Polynomial sq = squarefree_part(m, v);
        gens.push_back(sq);
    }
    return Ideal(I.ctx(), std::move(gens));
}

ReducedCert certify_reduced(const Ideal& I) {
    const auto& ctx = *I.ctx();
    MonomialOrder ord = MonomialOrder::grevlex(ctx);
    const auto& B = I.default_basis();
    if (B.empty()) return ReducedCert::Reduced;

    // Squarefree initial ideal (main-variable part over Q(params)).
    bool squarefree = true;
    for (const auto& g : B) {
        Monomial mp = main_part(g.leading_monomial(ord), ctx);
        for (auto e : mp)
            if (e > 1) squarefree = false;
    }
    if (squarefree) return ReducedCert::Reduced;

    // Peel a variable occurring only as a linear leading monomial. In a
    // reduced basis such a variable appears nowhere else, so dropping the
    // generator keeps a reduced basis of the contracted ideal.
    for (size_t i = 0; i < B.size(); ++i) {
        Monomial mp = main_part(B[i].leading_monomial(ord), ctx);
        int var = -1;
        bool linear = mono_degree(mp) == 1;
        for (int v = 0; v < (int)mp.size() && linear; ++v)
            if (mp[v]) var = v;
        if (!linear || var < 0) continue;
        bool elsewhere = false;
        for (size_t j = 0; j < B.size(); ++j) {
            if (j == i) continue;
            elsewhere = elsewhere || B[j].depends_on(var);
        }
        if (elsewhere) continue;
        std::vector<Polynomial> rest;
        for (size_t j = 0; j < B.size(); ++j)
            if (j != i) rest.push_back(B[j]);
        return certify_reduced(Ideal(I.ctx(), std::move(rest)));
    }

    // Principal: characteristic-zero squarefreeness via the singular locus.
    if (B.size() == 1) {
        const Polynomial& f = B[0];
        std::vector<Polynomial> jac = {f};
        for (int v = 0; v < ctx.n_main(); ++v) {
            Polynomial d = f.derivative(v);
            if (!d.is_zero()) jac.push_back(d);
        }
        auto dim_f = dimension(I);
        auto dim_j = dimension(Ideal(I.ctx(), std::move(jac)));
        if (!dim_f) return ReducedCert::Reduced;  // empty is vacuously reduced
        if (!dim_j || *dim_j < *dim_f) return ReducedCert::Reduced;
        return ReducedCert::Unknown;
    }

    return ReducedCert::Unknown;
}

}  // namespace chow
