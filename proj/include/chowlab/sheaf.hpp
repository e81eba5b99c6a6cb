// Support kernels, cycle classes modulo support, gluing over two opens, and
// the two-open exactness report.
//
// An open set is presented by the ideal of its closed complement, so set
// algebra is ideal algebra: intersection of opens multiplies the ideals,
// union adds them.
#pragma once

#include <string>
#include <vector>

#include "chowlab/cycle.hpp"
#include "chowlab/report.hpp"

namespace chow {

// U = Y \ V(closed_complement). The whole space is the complement of V(1).
struct OpenSet {
    AmbientContext ambient;
    Ideal closed_complement;

    static OpenSet whole(const AmbientContext& a);
    // generators must involve ambient variables only
    static OpenSet complement_of(const AmbientContext& a, const std::vector<Polynomial>& gens);
    bool is_whole() const;
};

OpenSet intersect(const OpenSet& a, const OpenSet& b);
OpenSet unite(const OpenSet& a, const OpenSet& b);

// A class modulo cycles supported off U.
struct QuotientClass {
    Cycle representative;
    OpenSet modulus;
};

// Restriction to a smaller open reuses the representative; throws
// "not a smaller open" if the target is not contained in the modulus.
QuotientClass restrict_class(const QuotientClass& x, const OpenSet& smaller);

// Kernel of restriction to the complement of V(W): every component of Z is
// supported in V(W) x cube.
bool in_kernel(const Cycle& Z, const Ideal& W);

// Z1 and Z2 represent the same class modulo cycles supported off U.
bool class_equal(const Cycle& Z1, const Cycle& Z2, const OpenSet& U);

// Glue two cycles whose difference is supported off U cap V: the glued cycle
// keeps exactly the components visible on the cover, agrees with x1 modulo
// supports off U and with x2 modulo supports off V, and splits as
// glued = (x1's part over U) + delta_u = (x2's part over V) + delta_v.
// Throws "precondition violated" on bad input; the construction guarantees
// the glued cycle is admissible and leaves no residual over the uncovered
// locus, so either failing is a hard error.
struct GlueResult {
    Cycle glued;
    Cycle delta_u;
    Cycle delta_v;
};

GlueResult glue(const Cycle& x1, const Cycle& x2, const OpenSet& U, const OpenSet& V);

// Exactness of 0 -> S(U u V) -> S(U) + S(V) -> S(U cap V) on a sample corpus:
// the kernel intersection law, vanishing of the composite, monotone
// restriction of class equality, glued preimages for compatible pairs, and
// flasque lifts for surjectivity.
SuiteReport mv_check(const OpenSet& U, const OpenSet& V, const std::vector<Cycle>& samples);

}  // namespace chow
