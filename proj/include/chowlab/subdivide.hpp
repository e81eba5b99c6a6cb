#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chowlab/cycle.hpp"

namespace chow {

// A scalar tuple c = (c_1..c_n) with every entry off 0 and 1, i.e. a point of
// the n-cube avoiding all faces.
struct GeneralPoint {
    std::vector<Rational> values;

    static GeneralPoint of(std::vector<Rational> vals);
    const Rational& at(int i) const { return values.at(i - 1); }  // 1-based
    int size() const { return (int)values.size(); }
    std::string str() const;
};

// Both sides of the homotopy identity boundary(phi) = Z - delta_{c_i,i}(Z),
// kept for diagnosis; pass means exact canonical equality (after degenerate
// reduction, which is the normal form in this module).
struct HomotopyCertificate {
    Cycle input;
    GeneralPoint c;
    int index = 0;
    Cycle phi;
    Cycle lhs;
    Cycle rhs;
    bool pass = false;
};

// The bi-division delta_{c,i} = sigma_{c,i} - tau_i . sigma_{1-c,i}, applied
// by pullback. Both pullbacks are re-checked for admissibility; a failure
// means the scalar was not general for this cycle and the caller should
// resample ("non-general parameter").
Cycle bidivision(const Cycle& Z, int i, const Rational& ci);
// Same with a symbolic or rational scalar (parameters only).
Cycle bidivision(const Cycle& Z, int i, const RationalFunction& ci);

// The homotopy cycle phi = (-1)^{n+1} (H_(0)^* Z - H_(1)^* Z) on the
// (n+1)-cube together with the verified identity
// boundary(phi) = Z - delta_{c_i,i}(Z). Z must have trivial codimension-1
// faces, either in the strict sense (faces vanish after degenerate
// reduction; the default) or modulo the supplied membership test.
HomotopyCertificate phi_homotopy(const Cycle& Z, int i, const GeneralPoint& c,
                                 const std::function<bool(const Cycle&)>& in_image = nullptr);

enum class SubdivisionForm { Iterated, VertexSum };

// Cubical subdivision at c: either delta_{c_1,1} up through delta_{c_n,n} in
// order, or the vertex-sum form with one signed pullback per cube vertex.
Cycle cubical_subdivision(const Cycle& Z, const GeneralPoint& c, SubdivisionForm form);

// The telescoping chain phi_n = phi_{c,1}(Z) + phi_{c,2}(delta_1 Z) + ...
// with the verified identity boundary(phi_n) = Z - sd_c(Z). Every
// intermediate cycle is re-checked to keep trivial codimension-1 faces.
struct ChainCertificate {
    Cycle phi;
    Cycle lhs;
    Cycle rhs;
    Cycle subdivided;
    bool pass = false;
};
ChainCertificate phi_chain(const Cycle& Z, const GeneralPoint& c);

// Deterministic rejection sampler for general position: draws small-height
// rationals in (0,1) from the seed and accepts the first tuple for which
// every constructed cycle (the delta chain, and the homotopy chain when Z is
// normalized) passes admissibility. Throws "budget exhausted" when no tuple
// within the budget works.
GeneralPoint sample_general_position(const Cycle& Z, uint64_t seed, int budget);

}  // namespace chow
