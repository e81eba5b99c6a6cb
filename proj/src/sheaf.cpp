#include "chowlab/sheaf.hpp"

#include <stdexcept>

#include "chowlab/groebner.hpp"

namespace chow {

namespace {

void require_ambient_only(const AmbientContext& a, const Polynomial& p) {
    const CtxPtr& v = a.vars();
    for (int j = 0; j < v->n_cube(); ++j)
        if (p.degree_in(v->cube_index(j)) > 0)
            throw std::invalid_argument("open set: generators must be ambient");
}

// components of Z whose support lies inside V(closed)
Cycle supported_part(const Cycle& Z, const Ideal& closed) {
    return Z - restrict_to_open(Z, closed);
}

}  // namespace

OpenSet OpenSet::whole(const AmbientContext& a) {
    return {a, Ideal(a.vars(), {Polynomial::constant(a.vars(), Rational(1))})};
}

OpenSet OpenSet::complement_of(const AmbientContext& a, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> embedded;
    for (const auto& g : gens) {
        Polynomial e = g.embedded(a.vars());
        require_ambient_only(a, e);
        embedded.push_back(std::move(e));
    }
    return {a, Ideal(a.vars(), std::move(embedded))};
}

bool OpenSet::is_whole() const { return is_unit_ideal(closed_complement); }

OpenSet intersect(const OpenSet& a, const OpenSet& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.closed_complement.gens())
        for (const auto& g : b.closed_complement.gens())
            gens.push_back(f * g.embedded(a.ambient.vars()));
    return {a.ambient, Ideal(a.ambient.vars(), std::move(gens))};
}

OpenSet unite(const OpenSet& a, const OpenSet& b) {
    std::vector<Polynomial> gens = a.closed_complement.gens();
    for (const auto& g : b.closed_complement.gens())
        gens.push_back(g.embedded(a.ambient.vars()));
    return {a.ambient, Ideal(a.ambient.vars(), std::move(gens))};
}

QuotientClass restrict_class(const QuotientClass& x, const OpenSet& smaller) {
    // smaller <= modulus iff V(modulus ideal) <= V(smaller ideal)
    if (!variety_contained(x.modulus.closed_complement, smaller.closed_complement))
        throw std::invalid_argument("not a smaller open");
    return {x.representative, smaller};
}

bool in_kernel(const Cycle& Z, const Ideal& W) { return is_supported_in(Z, W); }

bool class_equal(const Cycle& Z1, const Cycle& Z2, const OpenSet& U) {
    return is_supported_in(Z1 - Z2, U.closed_complement);
}

GlueResult glue(const Cycle& x1, const Cycle& x2, const OpenSet& U, const OpenSet& V) {
    AdmissibilityWitness w1 = is_admissible(x1);
    if (!w1.ok)
        throw std::invalid_argument("precondition violated: first cycle is inadmissible, " +
                                    w1.detail);
    AdmissibilityWitness w2 = is_admissible(x2);
    if (!w2.ok)
        throw std::invalid_argument("precondition violated: second cycle is inadmissible, " +
                                    w2.detail);
    OpenSet inter = intersect(U, V);
    if (!is_supported_in(x1 - x2, inter.closed_complement))
        throw std::invalid_argument(
            "precondition violated: the difference is not supported off the intersection");

    // the parts visible on each open, closures taken componentwise
    Cycle xu = restrict_to_open(x1, U.closed_complement);
    Cycle xv = restrict_to_open(x2, V.closed_complement);
    // components seen only on V complete the glued cycle
    Cycle glued = xu + supported_part(xv, U.closed_complement);
    Cycle du = glued - xu;
    Cycle dv = glued - xv;

    if (!is_supported_in(du, U.closed_complement) ||
        !is_supported_in(dv, V.closed_complement))
        throw std::logic_error("glue: residual supports disagree with the construction");
    OpenSet cover = unite(U, V);
    if (!supported_part(glued, cover.closed_complement).is_zero())
        throw std::logic_error("glue: nonzero residual over the uncovered locus");
    AdmissibilityWitness wg = is_admissible(glued);
    if (!wg.ok) throw std::logic_error("inadmissible glue: " + wg.detail);

    return {std::move(glued), std::move(du), std::move(dv)};
}

SuiteReport mv_check(const OpenSet& U, const OpenSet& V, const std::vector<Cycle>& samples) {
    SuiteReport rep;
    rep.suite = "mv-exactness";
    rep.statement = "the two-open section sequence is exact on the sample corpus";

    OpenSet inter = intersect(U, V);
    OpenSet cover = unite(U, V);
    const Ideal& A = U.closed_complement;
    const Ideal& B = V.closed_complement;

    {
        // both components of the first map share the representative, so the
        // second map kills it
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples.size() && ok; ++i)
            if (!class_equal(samples[i], samples[i], inter)) {
                ok = false;
                detail = "sample " + std::to_string(i);
            }
        rep.add("composite of the two maps vanishes", ok, detail);
    }
    {
        // in both kernels iff in the kernel of the intersected support
        std::vector<Polynomial> sum = A.gens();
        for (const auto& g : B.gens()) sum.push_back(g.embedded(U.ambient.vars()));
        Ideal AB(U.ambient.vars(), std::move(sum));
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples.size() && ok; ++i) {
            bool both = in_kernel(samples[i], A) && in_kernel(samples[i], B);
            if (both != in_kernel(samples[i], AB)) {
                ok = false;
                detail = "sample " + std::to_string(i);
            }
        }
        rep.add("kernel intersection law", ok, detail);
    }
    {
        // class equality over the cover descends to each open and further down
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples.size() && ok; ++i)
            for (size_t j = i + 1; j < samples.size() && ok; ++j) {
                if (!class_equal(samples[i], samples[j], cover)) continue;
                if (!(class_equal(samples[i], samples[j], U) &&
                      class_equal(samples[i], samples[j], V) &&
                      class_equal(samples[i], samples[j], inter))) {
                    ok = false;
                    detail = "pair " + std::to_string(i) + "," + std::to_string(j);
                }
            }
        rep.add("class equality restricts monotonically", ok, detail);
    }
    {
        // compatible pairs glue to a common preimage
        bool ok = true;
        int pairs = 0;
        std::string detail;
        for (size_t i = 0; i < samples.size() && ok; ++i)
            for (size_t j = 0; j < samples.size() && ok; ++j) {
                if (!is_supported_in(samples[i] - samples[j], inter.closed_complement))
                    continue;
                ++pairs;
                try {
                    GlueResult g = glue(samples[i], samples[j], U, V);
                    if (!(class_equal(g.glued, samples[i], U) &&
                          class_equal(g.glued, samples[j], V) &&
                          is_supported_in(g.delta_u, A) && is_supported_in(g.delta_v, B))) {
                        ok = false;
                        detail = "pair " + std::to_string(i) + "," + std::to_string(j);
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = "pair " + std::to_string(i) + "," + std::to_string(j) + ": " +
                             e.what();
                }
            }
        if (ok) detail = std::to_string(pairs) + " compatible pairs";
        rep.add("compatible pairs glue to a common preimage", ok, detail);
    }
    {
        // flasque lift: reusing the representative over U hits every class
        // over the intersection
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples.size() && ok; ++i) {
            QuotientClass down{samples[i], inter};
            QuotientClass lift{samples[i], U};
            if (!class_equal(restrict_class(lift, inter).representative, down.representative,
                             inter)) {
                ok = false;
                detail = "sample " + std::to_string(i);
            }
        }
        rep.add("flasque lifts witness surjectivity", ok, detail);
    }

    return rep;
}

}  // namespace chow
