#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowlab/polynomial.hpp"
#include "chowlab/report.hpp"

namespace chow {

// The n-cube here is affine n-space with coordinates y1..yn and the two
// face hyperplanes {y_i = 0}, {y_i = 1} in each direction.

// A face: partial assignment of coordinate indices (0-based) to {0,1}.
struct Face {
    int n = 0;
    std::map<int, int> assignment;

    int codim() const { return (int)assignment.size(); }
};

// A vertex: total assignment, stored as a 0/1 vector.
struct Vertex {
    std::vector<int> coords;

    int dim() const { return (int)coords.size(); }
    int ones() const {
        int k = 0;
        for (int c : coords) k += c;
        return k;
    }
    std::string str() const;
};

// (-1)^{number of coordinates equal to 1}
int vertex_sign(const Vertex& v);

// Enumerate all 2^n vertices of the n-cube, in binary counting order with
// coordinate 1 as the least significant bit.
std::vector<Vertex> cube_vertices(int n);

// A morphism between cubes, as a tuple of rational functions in the source
// cube coordinates and shared scalar parameters. Composition substitutes,
// equality cross-multiplies; both are exact, so identities verified with a
// symbolic parameter hold for every value of it.
class CubeMorphism {
public:
    CubeMorphism(CtxPtr source, CtxPtr target, std::vector<RationalFunction> coords);

    const CtxPtr& source() const { return source_; }
    const CtxPtr& target() const { return target_; }
    int source_dim() const { return source_->n_cube(); }
    int target_dim() const { return target_->n_cube(); }
    const std::vector<RationalFunction>& coords() const { return coords_; }

    // Context with cube coordinates y1..yn and the given scalar parameters.
    static CtxPtr cube_ctx(int n, std::vector<std::string> params = {});

    static CubeMorphism identity(const CtxPtr& ctx);
    // tau_j: y_j -> 1 - y_j (1-based j)
    static CubeMorphism involution(const CtxPtr& ctx, int j);
    // sigma_{c,j}: y_j -> c*y_j; scaling by the constants 0 or 1 is rejected
    static CubeMorphism scaling(const CtxPtr& ctx, int j, const RationalFunction& c);
    // mu: square -> line, (y1,y2) -> y1*y2
    static CubeMorphism multiplication(const CtxPtr& ctx2);
    // iota_j^eps: inserts the constant eps at slot j; ctx is the target cube
    static CubeMorphism face_map(const CtxPtr& ctx, int j, int eps);
    // pr_j: drops coordinate j; ctx is the source cube
    static CubeMorphism projection(const CtxPtr& ctx, int j);
    // pi_v: flips the coordinates where v_i = 1
    static CubeMorphism pi_v(const CtxPtr& ctx, const Vertex& v);
    // iota_v: scales coordinate i by c_i (v_i = 0) or 1-c_i (v_i = 1)
    static CubeMorphism iota_v(const CtxPtr& ctx, const Vertex& v,
                               const std::vector<RationalFunction>& c);
    // eta_c^0 (y,z) -> (1-(1-c)(1-z))*y and eta_c^1 (y,z) -> 1-(1-c)*y*(1-z)
    static CubeMorphism eta(const CtxPtr& ctx2, int ell, const RationalFunction& c);
    // the homotopy map on the (n+1)-cube: coordinate j stays y_j except
    // coordinate i, which becomes eta_{c_i}^ell(y_i, y_{n+1})
    static CubeMorphism h_map(const CtxPtr& ctx_np1, int ell,
                              const std::vector<RationalFunction>& c, int i);

    // this after g
    CubeMorphism composed(const CubeMorphism& g) const;
    bool equals(const CubeMorphism& o) const;
    std::string str() const;

private:
    CtxPtr source_;
    CtxPtr target_;
    std::vector<RationalFunction> coords_;
};

// All eight boundary identities of eta_c^0, eta_c^1 plus their
// factorizations through mu, with c symbolic.
SuiteReport verify_eta_table();

// The five-case face table of the homotopy maps for 1 <= n <= nmax, all
// i, j, eps, ell, with a fully symbolic parameter tuple.
SuiteReport verify_h_face_table(int nmax);

}  // namespace chow
