#include "chowlab/subdivide.hpp"

#include <random>
#include <stdexcept>

namespace chow {

namespace {

bool off_faces(const Rational& c) { return !c.is_zero() && !(c == Rational(1)); }

void require_admissible(const Cycle& W, const std::string& what) {
    auto w = is_admissible(W);
    if (!w.ok)
        throw std::runtime_error("non-general parameter: " + what + " is inadmissible, " +
                                 w.detail);
}

std::vector<RationalFunction> constant_tuple(const CtxPtr& ctx, const GeneralPoint& c) {
    std::vector<RationalFunction> vals;
    vals.reserve(c.values.size());
    for (const auto& v : c.values) vals.push_back(RationalFunction::constant(ctx, v));
    return vals;
}

bool faces_trivial(const Cycle& F) { return kill_degenerates(F).is_zero(); }

}  // namespace

GeneralPoint GeneralPoint::of(std::vector<Rational> vals) {
    for (const auto& v : vals)
        if (!off_faces(v))
            throw std::invalid_argument("general point must avoid 0 and 1 in every slot");
    GeneralPoint p;
    p.values = std::move(vals);
    return p;
}

std::string GeneralPoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += values[i].str();
    }
    return s + ")";
}

Cycle bidivision(const Cycle& Z, int i, const Rational& ci) {
    if (!off_faces(ci)) throw std::runtime_error("non-general parameter: scalar is 0 or 1");
    CtxPtr mctx = CubeMorphism::cube_ctx(Z.cube_dim());
    return bidivision(Z, i, RationalFunction::constant(mctx, ci));
}

Cycle bidivision(const Cycle& Z, int i, const RationalFunction& ci) {
    int n = Z.cube_dim();
    if (i < 1 || i > n) throw std::invalid_argument("bidivision index out of range");
    if (ci.is_polynomial() && ci.as_polynomial().is_constant()) {
        auto v = ci.as_polynomial().constant_value();
        if (v && !off_faces(*v))
            throw std::runtime_error("non-general parameter: scalar is 0 or 1");
    }

    CtxPtr mctx = CubeMorphism::cube_ctx(n, ci.ctx()->params);
    RationalFunction c = ci.embedded(mctx);
    RationalFunction onemc = RationalFunction::constant(mctx, Rational(1)) - c;

    CubeMorphism first = CubeMorphism::scaling(mctx, i, c);
    CubeMorphism second =
        CubeMorphism::involution(mctx, i).composed(CubeMorphism::scaling(mctx, i, onemc));

    Cycle A = pullback(Z, first);
    Cycle B = pullback(Z, second);
    require_admissible(A, "the scaling pullback");
    require_admissible(B, "the flipped-scaling pullback");
    return A - B;
}

HomotopyCertificate phi_homotopy(const Cycle& Z, int i, const GeneralPoint& c,
                                 const std::function<bool(const Cycle&)>& in_image) {
    int n = Z.cube_dim();
    if (i < 1 || i > n) throw std::invalid_argument("homotopy index out of range");
    if (c.size() != n) throw std::invalid_argument("general point size must match the cube");

    auto trivial = in_image ? in_image : std::function<bool(const Cycle&)>(faces_trivial);
    if (!is_normalized_mod(Z, trivial))
        throw std::runtime_error("not normalized: a codimension-1 face of the input is nonzero");

    CtxPtr hctx = CubeMorphism::cube_ctx(n + 1);
    auto cvals = constant_tuple(hctx, c);
    CubeMorphism H0 = CubeMorphism::h_map(hctx, 0, cvals, i);
    CubeMorphism H1 = CubeMorphism::h_map(hctx, 1, cvals, i);

    Cycle P0 = pullback(Z, H0);
    Cycle P1 = pullback(Z, H1);
    require_admissible(P0, "the lower homotopy pullback");
    require_admissible(P1, "the upper homotopy pullback");

    HomotopyCertificate cert;
    cert.input = Z;
    cert.c = c;
    cert.index = i;
    long long sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n+1}
    cert.phi = (P0 - P1).scaled(sign);
    cert.lhs = boundary_nondegenerate(cert.phi);
    cert.rhs = kill_degenerates(Z - bidivision(Z, i, c.at(i)));
    cert.pass = cert.lhs.equals(cert.rhs) || (in_image && in_image(cert.lhs - cert.rhs));
    return cert;
}

Cycle cubical_subdivision(const Cycle& Z, const GeneralPoint& c, SubdivisionForm form) {
    int n = Z.cube_dim();
    if (c.size() != n) throw std::invalid_argument("general point size must match the cube");

    if (form == SubdivisionForm::Iterated) {
        Cycle W = Z;
        for (int i = 1; i <= n; ++i) W = bidivision(W, i, c.at(i));
        return W;
    }

    CtxPtr mctx = CubeMorphism::cube_ctx(n);
    auto cvals = constant_tuple(mctx, c);
    Cycle sum(Z.context(), Z.d());
    for (const auto& v : cube_vertices(n)) {
        CubeMorphism m = CubeMorphism::pi_v(mctx, v).composed(
            CubeMorphism::iota_v(mctx, v, cvals));
        Cycle term = pullback(Z, m);
        require_admissible(term, "the vertex pullback at " + v.str());
        sum = sum + term.scaled(vertex_sign(v));
    }
    return sum;
}

ChainCertificate phi_chain(const Cycle& Z, const GeneralPoint& c) {
    int n = Z.cube_dim();
    if (c.size() != n) throw std::invalid_argument("general point size must match the cube");
    if (!is_normalized(Z))
        throw std::runtime_error("not normalized: a codimension-1 face of the input is nonzero");

    ChainCertificate chain;
    chain.phi = Cycle(Z.context().with_cube(n + 1), Z.d());
    chain.pass = true;

    Cycle W = Z;
    for (int i = 1; i <= n; ++i) {
        try {
            HomotopyCertificate cert = phi_homotopy(W, i, c);
            chain.pass = chain.pass && cert.pass;
            chain.phi = chain.phi + cert.phi;
            W = bidivision(W, i, c.at(i));
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(std::string(e.what()) + " (chain stage " +
                                     std::to_string(i) + ")");
        }
        if (!is_normalized(W))
            throw std::runtime_error(
                "not normalized: bi-division lost a trivial face at chain stage " +
                std::to_string(i));
    }

    chain.subdivided = W;
    chain.lhs = boundary_nondegenerate(chain.phi);
    chain.rhs = kill_degenerates(Z - W);
    chain.pass = chain.pass && chain.lhs.equals(chain.rhs);
    return chain;
}

GeneralPoint sample_general_position(const Cycle& Z, uint64_t seed, int budget) {
    std::mt19937_64 rng(seed);
    int n = Z.cube_dim();
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Rational> vals;
        for (int k = 0; k < n; ++k) {
            long b = (long)(rng() % 29) + 2;  // denominators 2..30, height well under 1000
            long a = (long)(rng() % (b - 1)) + 1;
            vals.push_back(Rational(a, b));
        }
        GeneralPoint c = GeneralPoint::of(std::move(vals));
        try {
            if (Z.is_zero()) return c;
            cubical_subdivision(Z, c, SubdivisionForm::Iterated);
            cubical_subdivision(Z, c, SubdivisionForm::VertexSum);
            if (is_normalized(Z)) phi_chain(Z, c);
            return c;
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()).find("non-general parameter") == std::string::npos) throw;
        }
    }
    throw std::runtime_error("budget exhausted after " + std::to_string(budget) + " attempts");
}

}  // namespace chow
