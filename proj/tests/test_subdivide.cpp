// Bi-division, homotopy certificates, cubical subdivision in both forms, and
// the general-position sampler.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "chowlab/subdivide.hpp"

using namespace chow;

namespace {

Cycle one(const AmbientContext& a, int d, const std::vector<std::string>& gens,
          long long coef = 1) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(Polynomial::parse(a.vars(), s));
    return build_cycle(a, d, {{coef, ps, true}});
}

// A nonzero normalized curve cycle on the square: two curves sharing all
// their face points, so the difference has trivial codimension-1 faces.
Cycle normalized_curve_pair(const AmbientContext& a) {
    Cycle C1 = one(a, -1, {"y1*y2 - 2"});
    Cycle C2 = one(a, -1, {"y1*y2*(1 + (y1 - 1)*(y2 - 1)) - 2"});
    return C1 - C2;
}

}  // namespace

TEST_CASE("bi-division of a point, by hand") {
    auto a1 = AmbientContext::make(0, 1);
    Cycle Z = one(a1, -1, {"y1 - 2"});

    // (1/3) y = 2 gives 6; 1 - (2/3) y = 2 gives -3/2
    Cycle D = bidivision(Z, 1, Rational(1, 3));
    Cycle expected = one(a1, -1, {"y1 - 6"}) - one(a1, -1, {"2*y1 + 3"});
    CHECK(D.equals(expected));

    CHECK(bidivision(Cycle(a1, -1), 1, Rational(1, 3)).is_zero());

    CHECK_THROWS_WITH_AS(bidivision(Z, 1, Rational(0)),
                         doctest::Contains("non-general parameter"), std::runtime_error);
    CHECK_THROWS_WITH_AS(bidivision(Z, 1, Rational(1)),
                         doctest::Contains("non-general parameter"), std::runtime_error);
}

TEST_CASE("bi-division with a symbolic scalar") {
    auto a1 = AmbientContext::make(0, 1);
    auto a1c = AmbientContext::make(0, 1, {"c"});
    Cycle Z = one(a1, -1, {"y1 - 2"});

    auto mctx = CubeMorphism::cube_ctx(1, {"c"});
    Cycle D = bidivision(Z, 1, RationalFunction::parse(mctx, "c"));
    Cycle expected = one(a1c, -1, {"c*y1 - 2"}) - one(a1c, -1, {"c*y1 - y1 - 1"});
    CHECK(D.equals(expected));

    // both faces vanish identically in c
    CHECK(is_normalized(D));
}

TEST_CASE("bi-division sends the lower face to the difference of faces") {
    auto a2 = AmbientContext::make(0, 2);
    Cycle Z = one(a2, -1, {"y1 + y2 - 3"});
    Cycle D = bidivision(Z, 1, Rational(1, 3));
    CHECK(face(D, 1, 0).equals(face(Z, 1, 0) - face(Z, 1, 1)));
    CHECK(face(D, 1, 1).is_zero());
}

TEST_CASE("bi-division preserves trivial faces") {
    auto a2 = AmbientContext::make(0, 2);
    Cycle Z = normalized_curve_pair(a2);
    REQUIRE(is_admissible(Z).ok);
    REQUIRE(is_normalized(Z));

    for (int i = 1; i <= 2; ++i) {
        Cycle D = bidivision(Z, i, Rational(2, 5));
        CHECK(is_normalized(D));
    }

    // and on a point fixture
    auto p2 = AmbientContext::make(0, 2);
    Cycle P = one(p2, -2, {"y1 - 2", "y2 - 3"});
    CHECK(is_normalized(bidivision(P, 1, Rational(1, 3))));
    CHECK(is_normalized(bidivision(P, 2, Rational(1, 3))));
}

TEST_CASE("homotopy certificate for a point, by hand") {
    auto a1 = AmbientContext::make(0, 1);
    Cycle Z = one(a1, -1, {"y1 - 2"});
    GeneralPoint c = GeneralPoint::of({Rational(1, 3)});

    HomotopyCertificate cert = phi_homotopy(Z, 1, c);
    CHECK(cert.pass);
    CHECK(cert.lhs.equals(cert.rhs));

    // phi, expanded by hand from the two homotopy coordinates at c = 1/3:
    //   (1 - (2/3)(1 - z)) y - 2  ->  2 y z + y - 6 (times 3)
    //   1 - (2/3) y (1 - z) - 2   ->  2 y z - 2 y - 3 (times -3/2, sign fixed)
    auto a2 = AmbientContext::make(0, 2);
    Cycle phi_expected =
        one(a2, -1, {"2*y1*y2 + y1 - 6"}) - one(a2, -1, {"2*y1*y2 - 2*y1 - 3"});
    CHECK(cert.phi.equals(phi_expected));

    // the right side is the input minus its bi-division
    Cycle rhs_expected = Z - bidivision(Z, 1, Rational(1, 3));
    CHECK(cert.rhs.equals(kill_degenerates(rhs_expected)));

    // mutation: flipping the sign of phi breaks the certificate
    CHECK(!boundary_nondegenerate(cert.phi.negated()).equals(cert.rhs));
}

TEST_CASE("homotopy certificate for the zero cycle") {
    auto a1 = AmbientContext::make(0, 1);
    HomotopyCertificate cert = phi_homotopy(Cycle(a1, -1), 1, GeneralPoint::of({Rational(1, 3)}));
    CHECK(cert.pass);
    CHECK(cert.phi.is_zero());
}

TEST_CASE("homotopy requires trivial faces") {
    auto a2 = AmbientContext::make(0, 2);
    Cycle Z = one(a2, -1, {"y1 + y2 - 3"});
    GeneralPoint c = GeneralPoint::of({Rational(1, 3), Rational(1, 4)});
    CHECK_THROWS_WITH_AS(phi_homotopy(Z, 1, c), doctest::Contains("not normalized"),
                         std::runtime_error);

    // the membership-test form can waive the precondition
    auto always = [](const Cycle&) { return true; };
    HomotopyCertificate cert = phi_homotopy(Z, 1, c, always);
    CHECK(cert.pass);  // trivially, modulo the all-accepting test
}

TEST_CASE("homotopy certificate on the normalized curve fixture") {
    auto a2 = AmbientContext::make(0, 2);
    Cycle Z = normalized_curve_pair(a2);
    GeneralPoint c = GeneralPoint::of({Rational(1, 3), Rational(2, 5)});

    for (int i = 1; i <= 2; ++i) {
        HomotopyCertificate cert = phi_homotopy(Z, i, c);
        CHECK(cert.pass);
        CHECK(cert.phi.d() == Z.d());
        CHECK(cert.phi.cube_dim() == 3);
    }
}

TEST_CASE("subdivision forms agree") {
    auto a1 = AmbientContext::make(0, 1);
    Cycle Z1 = one(a1, -1, {"y1 - 2"});
    GeneralPoint c1 = GeneralPoint::of({Rational(1, 3)});

    Cycle it1 = cubical_subdivision(Z1, c1, SubdivisionForm::Iterated);
    Cycle vx1 = cubical_subdivision(Z1, c1, SubdivisionForm::VertexSum);
    Cycle expected = one(a1, -1, {"y1 - 6"}) - one(a1, -1, {"2*y1 + 3"});
    CHECK(it1.equals(expected));
    CHECK(vx1.equals(expected));
    CHECK(it1.equals(bidivision(Z1, 1, Rational(1, 3))));

    auto a2 = AmbientContext::make(0, 2);
    Cycle P = one(a2, -2, {"y1 - 2", "y2 - 3"});
    GeneralPoint c2 = GeneralPoint::of({Rational(1, 3), Rational(1, 4)});
    CHECK(cubical_subdivision(P, c2, SubdivisionForm::Iterated)
              .equals(cubical_subdivision(P, c2, SubdivisionForm::VertexSum)));

    Cycle ZC = normalized_curve_pair(a2);
    GeneralPoint c2b = GeneralPoint::of({Rational(2, 5), Rational(3, 7)});
    CHECK(cubical_subdivision(ZC, c2b, SubdivisionForm::Iterated)
              .equals(cubical_subdivision(ZC, c2b, SubdivisionForm::VertexSum)));

    auto a3 = AmbientContext::make(0, 3);
    Cycle P3 = one(a3, -3, {"y1 - 2", "y2 - 3", "y3 - 5"});
    GeneralPoint c3 = GeneralPoint::of({Rational(1, 3), Rational(1, 4), Rational(2, 7)});
    CHECK(cubical_subdivision(P3, c3, SubdivisionForm::Iterated)
              .equals(cubical_subdivision(P3, c3, SubdivisionForm::VertexSum)));
}

TEST_CASE("telescoping chain certificate") {
    auto a1 = AmbientContext::make(0, 1);
    Cycle Z1 = one(a1, -1, {"y1 - 2"});
    GeneralPoint c1 = GeneralPoint::of({Rational(1, 3)});

    ChainCertificate chain = phi_chain(Z1, c1);
    CHECK(chain.pass);
    CHECK(chain.lhs.equals(chain.rhs));
    CHECK(chain.subdivided.equals(cubical_subdivision(Z1, c1, SubdivisionForm::Iterated)));
    // n=1: the chain is a single homotopy
    CHECK(chain.phi.equals(phi_homotopy(Z1, 1, c1).phi));

    // zero cycle
    ChainCertificate zero = phi_chain(Cycle(a1, -1), c1);
    CHECK(zero.pass);
    CHECK(zero.phi.is_zero());

    // two-stage chain on the square
    auto a2 = AmbientContext::make(0, 2);
    Cycle P = one(a2, -2, {"y1 - 2", "y2 - 3"});
    GeneralPoint c2 = GeneralPoint::of({Rational(1, 3), Rational(1, 4)});
    ChainCertificate chain2 = phi_chain(P, c2);
    CHECK(chain2.pass);
    // the subdivided cycle again has trivial faces
    CHECK(is_normalized(chain2.subdivided));

    Cycle ZC = normalized_curve_pair(a2);
    GeneralPoint c2b = GeneralPoint::of({Rational(2, 5), Rational(3, 7)});
    ChainCertificate chainC = phi_chain(ZC, c2b);
    CHECK(chainC.pass);
    CHECK(is_normalized(chainC.subdivided));
}

TEST_CASE("general-position sampling") {
    auto a1 = AmbientContext::make(0, 1);
    Cycle Z = one(a1, -1, {"y1 - 2"});

    GeneralPoint c1 = sample_general_position(Z, 0, 50);
    GeneralPoint c2 = sample_general_position(Z, 0, 50);
    REQUIRE(c1.size() == 1);
    CHECK(c1.values[0] == c2.values[0]);  // determinism
    CHECK(!c1.values[0].is_zero());

    // zero cycle: first draw accepted
    GeneralPoint cz = sample_general_position(Cycle(a1, -1), 7, 1);
    CHECK(cz.size() == 1);

    // adversarial fixture: [point 1/2] sends c = 1/2 onto the face y = 1
    Cycle adv = one(a1, -1, {"2*y1 - 1"});
    CHECK_THROWS_WITH_AS(bidivision(adv, 1, Rational(1, 2)),
                         doctest::Contains("non-general parameter"), std::runtime_error);
    GeneralPoint cadv = sample_general_position(adv, 3, 100);
    CHECK(!(cadv.values[0] == Rational(1, 2)));
    CHECK(bidivision(adv, 1, cadv.values[0]).components().size() == 2);

    CHECK_THROWS_WITH_AS(sample_general_position(Z, 0, 0), doctest::Contains("budget exhausted"),
                         std::runtime_error);
}

TEST_CASE("general point validation") {
    CHECK_THROWS_AS(GeneralPoint::of({Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralPoint::of({Rational(1, 3), Rational(1)}), std::invalid_argument);
    GeneralPoint p = GeneralPoint::of({Rational(1, 3), Rational(-2, 7)});
    CHECK(p.str() == "(1/3, -2/7)");
    CHECK(p.at(2) == Rational(-2, 7));
}
