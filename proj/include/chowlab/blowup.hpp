// Towers of face blow-ups over the cube, kept entirely at the chart level:
// distinguished divisors, vertex charts with exact inverses, edge
// permutations and signs, the per-vertex signed maps back to the base cube,
// strict transforms of cycles along them, level-M subdivision, and the
// homotopy certificate comparing two levels.
//
// No blown-up scheme is ever materialized. A space is its divisor
// combinatorics plus one chart per vertex, everything expressed as rational
// functions in the base-cube coordinates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowlab/cycle.hpp"
#include "chowlab/subdivide.hpp"

namespace chow {

// One distinguished divisor. Base-cube facets carry (coord, eps) with the
// fixed ordering id 2k-1 = {y_k = 1}, id 2k = {y_k = 0}; exceptional
// divisors carry the tower step that created them.
struct DivisorInfo {
    int id = 0;
    bool exceptional = false;
    int coord = 0;  // facets: 1-based cube coordinate
    int eps = 0;    // facets: the face value
    int step = 0;   // exceptional: 1-based blow-up step
    std::string str() const;
};

// Chart at a vertex. Slots are sorted by incident divisor id; slot j of
// `forward` cuts divisor incident[j]. `forward` writes the chart functions
// in base-cube coordinates; `inverse` writes the base-cube coordinates in
// chart values (both over a plain cube context, y1..yn). The pair satisfies
// forward(inverse(u)) = u and inverse(forward(y)) = y identically.
struct VertexChart {
    int id = 0;
    std::string name;
    // set iff the vertex is an untouched base-cube corner (sign anchor)
    std::optional<Vertex> corner;
    std::vector<int> incident;
    std::vector<RationalFunction> forward;
    std::vector<RationalFunction> inverse;
};

// An edge: the n-1 divisors cutting it, its two vertices (indices into the
// vertex list), and the slot permutation g with g[p] = q matching divisors
// between the two charts.
struct Edge {
    std::vector<int> divisors;
    int v = 0;
    int w = 0;
    std::vector<int> perm;
};

int permutation_sign(const std::vector<int>& perm);

struct DistinguishedSpace {
    int level = 0;
    int dims = 0;
    CtxPtr ctx;  // cube context y1..yn
    std::vector<DivisorInfo> divisors;
    // all nonempty divisor subsets, each of codimension equal to its size
    std::vector<std::vector<int>> faces;
    std::vector<VertexChart> vertices;
    std::vector<Edge> edges;

    bool has_face(const std::vector<int>& ids) const;
    // index of the unique vertex incident to exactly these divisors, -1 if none
    int find_vertex(const std::vector<int>& ids) const;
};

// The n-cube with its 2n facets and 2^n corner charts (y_i, or 1-y_i on the
// eps=1 side).
DistinguishedSpace initial_space(int n);

// Blow up the face cut by the given divisors. Vertices off the center keep
// their charts; each vertex on the center is replaced by one new vertex per
// incident center divisor, with chart functions divided by the chosen slot
// and the exceptional divisor appended. Throws "not a face" and
// "codimension < 2".
DistinguishedSpace blow_up_face(const DistinguishedSpace& space, std::vector<int> face);

// Slot permutation between two adjacent vertices; throws "not adjacent".
std::vector<int> edge_permutation(const DistinguishedSpace& space, int v, int w);

// Signs per vertex: anchored at (-1)^(number of ones) on untouched corners,
// propagated along edges by sign(v) = -sgn(g(v,w)) sign(w), and checked for
// consistency on every edge. Throws "no anchor vertex" and
// "inconsistent signs".
std::vector<int> vertex_signs(const DistinguishedSpace& space);

// A tower of face blow-ups: the base cube and one space per step.
struct Tower {
    int dims = 0;
    std::vector<std::vector<int>> steps;
    std::vector<DistinguishedSpace> spaces;

    const DistinguishedSpace& top() const { return spaces.back(); }
    int levels() const { return (int)steps.size(); }
};

Tower build_tower(int n, const std::vector<std::vector<int>>& steps);

// The same tower run over the (n+1)-cube, with each center extended by the
// facet {y_{n+1} = 1}: the top space contains the original tower's top space
// as the strict transform of that facet. Exceptional ids shift by 2.
Tower homotopy_tower(const Tower& tower);

// One signed rational map back to the base cube, attached to a vertex of the
// tower's top space.
struct SignedMapTerm {
    int sign = 0;
    CubeMorphism map;
    int vertex = 0;
};

struct SignedRationalMapSum {
    std::vector<SignedMapTerm> terms;
};

// For each vertex v of the top space: the composite of the chart inverse
// with the slotwise scaling u_j -> u_j * f_j^v(c), signed by vertex_signs.
// Throws "parameter on divisor image" if c meets a chart function's zero or
// pole.
SignedRationalMapSum phi_component_maps(const Tower& tower, const GeneralPoint& c);

// Strict transform of Z along a (possibly rational) cube map: pull the
// generators back, clear denominators, and saturate away everything lying
// over the 2n base-cube facets and the denominator loci. Components of Z
// must survive; a component whose whole preimage is removed throws
// "component collapses".
Cycle strict_transform(const Cycle& Z, const CubeMorphism& map, long long sign);

// The cycle times an extra cube factor: same generators, one more cube
// coordinate, dimension up by one.
Cycle cylinder(const Cycle& Z);

struct LevelSubdivision {
    Cycle cycle;
    AdmissibilityWitness admissible;
};

// Level-M subdivision: the signed sum of strict transforms over the top
// space's vertices, with the result's face admissibility reported (not
// enforced). Components of Z may not lie inside a base-cube facet.
LevelSubdivision sd_level(const Cycle& Z, const Tower& tower, const GeneralPoint& c);

// Homotopy between the level-M and level-0 subdivisions: the cycle H on the
// (n+1)-cube built from the homotopy tower at c' = (c, c_{n+1}), with
// lhs = its nondegenerate boundary and rhs = sd_level(Z) - sd_level_0(Z)
// after degenerate reduction. pass means lhs equals rhs exactly.
struct H0Certificate {
    Cycle homotopy;
    Cycle lhs;
    Cycle rhs;
    bool pass = false;
};

H0Certificate homotopy_h0(const Cycle& Z, const Tower& tower, const GeneralPoint& cprime);

}  // namespace chow
