// Support kernels, classes modulo support, gluing over two opens, and the
// two-open exactness report, on point cycles over the affine line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "chowlab/sheaf.hpp"

using namespace chow;

namespace {

Cycle one(const AmbientContext& a, int d, const std::vector<std::string>& gens,
          long long coef = 1) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(Polynomial::parse(a.vars(), s));
    return build_cycle(a, d, {{coef, ps, true}});
}

Ideal ideal(const AmbientContext& a, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(Polynomial::parse(a.vars(), s));
    return Ideal(a.vars(), ps);
}

}  // namespace

TEST_CASE("support kernels over the affine line") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt0 = one(a, -1, {"x1", "y1 - 2"});
    Cycle pt1 = one(a, -1, {"x1 - 1", "y1 - 2"});
    Cycle diag = one(a, 0, {"y1 - x1"});

    CHECK(in_kernel(pt0, ideal(a, {"x1"})));
    CHECK_FALSE(in_kernel(diag, ideal(a, {"x1"})));

    // in both kernels iff in the kernel of the intersected support
    Ideal W1 = ideal(a, {"x1*(x1 - 1)"});
    Ideal W2 = ideal(a, {"x1*(x1 - 2)"});
    Ideal W12 = ideal(a, {"x1*(x1 - 1)", "x1*(x1 - 2)"});
    CHECK(in_kernel(pt0, W1));
    CHECK(in_kernel(pt0, W2));
    CHECK(in_kernel(pt0, W12));

    Cycle two = pt0 + pt1;
    CHECK(in_kernel(two, W1));
    CHECK_FALSE(in_kernel(two, W2));
    CHECK_FALSE(in_kernel(two, W12));
}

TEST_CASE("class equality modulo supported cycles") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt0 = one(a, -1, {"x1", "y1 - 2"});
    Cycle pt1 = one(a, -1, {"x1 - 1", "y1 - 2"});
    Cycle pt2 = one(a, -1, {"x1 - 2", "y1 - 3"});
    OpenSet U = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1")});

    CHECK(class_equal(pt2, pt2 + pt0, U));
    CHECK_FALSE(class_equal(pt2, pt2 + pt1, U));

    // over the whole space the quotient is by the zero subgroup
    OpenSet Y = OpenSet::whole(a);
    CHECK(Y.is_whole());
    CHECK_FALSE(U.is_whole());
    CHECK(class_equal(pt2, pt2, Y));
    CHECK_FALSE(class_equal(pt2, pt2 + pt0, Y));

    CHECK_THROWS_WITH_AS(
        OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "y1 - 1")}),
        doctest::Contains("ambient"), std::invalid_argument);
}

TEST_CASE("open set algebra is ideal algebra") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt0 = one(a, -1, {"x1", "y1 - 2"});
    Cycle pt1 = one(a, -1, {"x1 - 1", "y1 - 2"});
    Cycle pt2 = one(a, -1, {"x1 - 2", "y1 - 3"});
    OpenSet U = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1")});
    OpenSet V = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1 - 1")});

    // the two punctured lines cover the line and meet off both points
    CHECK(unite(U, V).is_whole());
    OpenSet I = intersect(U, V);
    CHECK(in_kernel(pt0, I.closed_complement));
    CHECK(in_kernel(pt1, I.closed_complement));
    CHECK_FALSE(in_kernel(pt2, I.closed_complement));
}

TEST_CASE("restriction reuses the representative") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt2 = one(a, -1, {"x1 - 2", "y1 - 3"});
    OpenSet U = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1")});
    OpenSet S = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1*(x1 - 1)")});

    QuotientClass cls{pt2, U};
    QuotientClass down = restrict_class(cls, S);
    CHECK(down.representative.equals(pt2));

    QuotientClass low{pt2, S};
    CHECK_THROWS_WITH_AS(restrict_class(low, U), doctest::Contains("not a smaller open"),
                         std::invalid_argument);
}

TEST_CASE("gluing two compatible cycles") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt0 = one(a, -1, {"x1", "y1 - 2"});
    Cycle pt2 = one(a, -1, {"x1 - 2", "y1 - 3"});
    Cycle pt3 = one(a, -1, {"x1 - 3", "y1 - 2"});
    OpenSet U = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1")});
    OpenSet V = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1 - 1")});

    // the extra point sits off U, so both classes come from one cycle
    GlueResult g = glue(pt0 + pt2, pt2, U, V);
    CHECK(g.glued.equals(pt2));
    CHECK(g.delta_u.is_zero());
    CHECK(g.delta_v.is_zero());
    CHECK(class_equal(g.glued, pt0 + pt2, U));
    CHECK(class_equal(g.glued, pt2, V));

    // equal inputs come back with the U-invisible part in the residual
    GlueResult same = glue(pt0 + pt2, pt0 + pt2, U, V);
    CHECK(same.glued.equals(pt0 + pt2));
    CHECK(same.delta_u.equals(pt0));
    CHECK(same.delta_v.is_zero());

    CHECK_THROWS_WITH_AS(glue(pt3 + pt2, pt2, U, V),
                         doctest::Contains("precondition violated"), std::invalid_argument);

    // a point on a face is inadmissible and rejected up front
    Cycle bad = one(a, -1, {"x1", "y1 - 1"});
    CHECK_THROWS_WITH_AS(glue(bad + pt2, pt2, U, V), doctest::Contains("inadmissible"),
                         std::invalid_argument);
}

TEST_CASE("two-open exactness on a point corpus") {
    AmbientContext a = AmbientContext::make(1, 1, {}, {});
    Cycle pt0 = one(a, -1, {"x1", "y1 - 2"});
    Cycle pt1 = one(a, -1, {"x1 - 1", "y1 - 2"});
    Cycle pt2 = one(a, -1, {"x1 - 2", "y1 - 3"});
    Cycle zero = build_cycle(a, -1, {});
    OpenSet U = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1")});
    OpenSet V = OpenSet::complement_of(a, {Polynomial::parse(a.vars(), "x1 - 1")});

    std::vector<Cycle> corpus = {pt0 + pt2, pt2, pt0, pt1, zero};
    SuiteReport rep = mv_check(U, V, corpus);
    CHECK(rep.pass());
    CHECK(rep.checks.size() == 5);
    for (const auto& c : rep.checks) CHECK(c.pass);

    // degenerate cover: everything collapses to the identity sequence
    SuiteReport triv = mv_check(OpenSet::whole(a), OpenSet::whole(a), corpus);
    CHECK(triv.pass());
}
