#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowlab/polynomial.hpp"

namespace chow {

// Ideal in one context. Reduced bases are cached per monomial order; the
// default-order basis is the canonical form used for equality and
// serialization. Formal parameters act as base-field transcendentals: every
// order compares them last, and unit detection, dimension and length read
// only the main-variable part of leading terms.
class Ideal {
public:
    Ideal() = default;
    Ideal(CtxPtr ctx, std::vector<Polynomial> gens);

    static Ideal zero(CtxPtr ctx) { return Ideal(std::move(ctx), {}); }

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const std::vector<Polynomial>& basis(const MonomialOrder& order) const;
    const std::vector<Polynomial>& default_basis() const;

    Ideal embedded(const CtxPtr& dst) const;

    // Canonical generator strings (default-order reduced basis, primitive
    // normalized). The zero ideal serializes as an empty list.
    std::vector<std::string> canonical_strings() const;

private:
    CtxPtr ctx_;
    std::vector<Polynomial> gens_;
    mutable std::map<std::string, std::vector<Polynomial>> cache_;
};

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Buchberger with the normal selection strategy (smallest lcm first) and the
// coprimality criterion, followed by minimalization and tail reduction. The
// result is the unique reduced basis, sorted by descending leading monomial,
// monic.
std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const MonomialOrder& order);

bool ideal_contains(const Ideal& I, const Polynomial& f);
bool ideal_equal(const Ideal& a, const Ideal& b);

// The unit ideal over Q(params): some basis element has a parameter-only
// leading term (with no parameters this reads "1 is in the basis").
bool is_unit_ideal(const Ideal& I);

// Krull dimension of the vanishing set inside the ambient+cube affine space
// over Q(params), via maximal independent variable sets modulo the leading
// term ideal. nullopt encodes the empty set. Auxiliary variables must not
// occur.
std::optional<int> dimension(const Ideal& I);

Ideal saturation(const Ideal& I, const Polynomial& f);

// Generators of I ∩ Q(params)[vars complement]; returned in the same
// context, free of the given variables.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// g vanishes on V(I), i.e. g lies in the radical.
bool vanishes_on(const Ideal& I, const Polynomial& g);
// V(inner) ⊆ V(outer).
bool variety_contained(const Ideal& inner, const Ideal& outer);

// dim_Q of the quotient ring for a zero-dimensional ideal (no parameters).
uint64_t quotient_length(const Ideal& I);

// Radical of a zero-dimensional ideal via univariate squarefree parts.
Ideal radical_zero_dimensional(const Ideal& I);

enum class ReducedCert { Reduced, Unknown };

// Certification that the ideal is radical, by (in order): squarefree
// initial ideal; peeling variables that occur only as a linear leading
// monomial; for principal ideals the characteristic-zero singular locus
// test. Unknown means no criterion applied, not that the ideal is bad.
ReducedCert certify_reduced(const Ideal& I);

// Univariate helpers (polynomials supported in a single variable).
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, int var);
Polynomial squarefree_part(const Polynomial& f, int var);

}  // namespace chow
