#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chowlab/cube.hpp"
#include "chowlab/groebner.hpp"

namespace chow {

// Where cycles live: the product of an affine ambient space (or a
// distinguished open subset of one) with the n-cube. Ambient variables are
// x1..xm, cube variables y1..yn. `open_units` lists ambient polynomials g
// whose product cuts out the complement of the ambient; an empty list means
// the whole affine space. All dimension and emptiness questions are asked
// after saturating along the units, i.e. over the open subset.
class AmbientContext {
public:
    AmbientContext() = default;
    static AmbientContext make(int m, int n, std::vector<std::string> params = {},
                               std::vector<Polynomial> open_units = {});

    int ambient_dim() const { return vars_->n_ambient(); }
    int cube_dim() const { return vars_->n_cube(); }
    const CtxPtr& vars() const { return vars_; }
    const std::vector<Polynomial>& open_units() const { return units_; }

    AmbientContext with_cube(int n) const;
    AmbientContext with_units(std::vector<Polynomial> more) const;
    AmbientContext without_units() const;

    bool same(const AmbientContext& o) const;

private:
    CtxPtr vars_;
    std::vector<Polynomial> units_;  // ambient variables only
};

// One summand of a cycle: an ideal in the ambient and cube variables with an
// integer coefficient. The ideal is kept saturated along the context's open
// units; its canonical reduced basis is the component's identity, so cycle
// arithmetic cancels exactly.
struct CycleComponent {
    Ideal ideal;
    long long coef = 0;
    int dim = -1;
    bool irreducible = false;
    std::string key;  // canonical basis strings, joined

    std::vector<std::string> generator_strings() const { return ideal.canonical_strings(); }
};

// A formal integer combination of subvarieties of (open in A^m) x cube^n,
// each of dimension d+n. Stored in canonical form: components sorted by
// canonical basis, coefficients merged, zeros dropped.
class Cycle {
public:
    Cycle() = default;
    Cycle(AmbientContext actx, int d) : actx_(std::move(actx)), d_(d) {}

    const AmbientContext& context() const { return actx_; }
    int d() const { return d_; }
    int cube_dim() const { return actx_.cube_dim(); }
    const std::vector<CycleComponent>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Cycle negated() const;
    Cycle scaled(long long k) const;
    Cycle operator+(const Cycle& o) const;
    Cycle operator-(const Cycle& o) const;
    bool equals(const Cycle& o) const;

    std::string str() const;

    friend Cycle build_cycle(const AmbientContext&, int,
                             const std::vector<std::tuple<long long, std::vector<Polynomial>, bool>>&);
    friend Cycle face(const Cycle&, int, int);
    friend Cycle pullback(const Cycle&, const CubeMorphism&);
    friend Cycle kill_degenerates(const Cycle&);
    friend Cycle restrict_to_open(const Cycle&, const Ideal&);
    friend Cycle closure_from_open(const Cycle&);
    friend Cycle localize(const Cycle&, const std::vector<Polynomial>&);

private:
    AmbientContext actx_;
    int d_ = 0;
    std::vector<CycleComponent> comps_;

    void insert(CycleComponent c);
    void canonicalize();
};

// Assemble a cycle from (coefficient, generators, irreducible-asserted)
// parts. Every part must cut dimension exactly d + n over the open ambient;
// parts that are empty over it are rejected as dimension mismatches.
Cycle build_cycle(const AmbientContext& actx, int d,
                  const std::vector<std::tuple<long long, std::vector<Polynomial>, bool>>& parts);

// The face {y_i = eps} of each component, as a cycle on the (n-1)-cube with
// the remaining cube variables renumbered. Empty intersections drop out;
// zero-dimensional non-reduced intersections contribute their length as a
// multiplicity; positive-dimensional ones must certify reduced.
// Throws "improper face" when a component fails to meet the face properly
// and "unsupported multiplicity" when no multiplicity can be certified.
Cycle face(const Cycle& Z, int i, int eps);

// Sum over i of (-1)^i (face(Z,i,1) - face(Z,i,0)).
Cycle boundary(const Cycle& Z);

// boundary followed by dropping degenerate components; this is the boundary
// in the quotient by degenerate cycles.
Cycle boundary_nondegenerate(const Cycle& Z);

struct AdmissibilityWitness {
    bool ok = true;
    std::string detail;  // first violation: component and face
};

// Proper-intersection test: every component meets every codimension-r face
// of the cube in dimension at most d + n - r (or not at all), over the open
// ambient.
AdmissibilityWitness is_admissible(const Cycle& Z);

// A component is degenerate when its ideal does not involve some cube
// variable, i.e. it is pulled back along the projection that forgets it.
bool is_degenerate(const CycleComponent& comp, const AmbientContext& actx);
Cycle kill_degenerates(const Cycle& Z);

// All 2n codimension-1 faces vanish after degenerate reduction.
bool is_normalized(const Cycle& Z);
// Same, but faces only need to pass the supplied membership test.
bool is_normalized_mod(const Cycle& Z, const std::function<bool(const Cycle&)>& in_image);

// Pull back along a cube morphism (identity on the ambient factor). The
// morphism must have polynomial coordinates; rational coordinates are
// outside the declared flat/iso classes and are rejected.
Cycle pullback(const Cycle& Z, const CubeMorphism& f);

// Does every component lie over the ambient closed set V(W)?
bool is_supported_in(const Cycle& Z, const Ideal& W);

// Drop the components contained in V(closed) x cube; the presentation of the
// survivors is unchanged.
Cycle restrict_to_open(const Cycle& Z, const Ideal& closed);

// Forget the open units: the same ideals read as cycles on the full ambient
// space. Components must not be contained in the vanishing of a unit.
Cycle closure_from_open(const Cycle& Z);

// Shrink the ambient to the distinguished open where the given units are
// invertible: components entirely inside their zero set drop out, the rest
// are saturated.
Cycle localize(const Cycle& Z, const std::vector<Polynomial>& units);

}  // namespace chow
