#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowlab/monomial_order.hpp"
#include "chowlab/rational.hpp"
#include "chowlab/varcontext.hpp"

namespace chow {

class RationalFunction;

// Multivariate polynomial over Q with exact coefficients. Terms are kept in
// a map under plain vector comparison; that storage order is independent of
// any monomial order, so one polynomial value can serve several orders.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(CtxPtr ctx, const Rational& c);

    static Polynomial variable(CtxPtr ctx, int index);
    static Polynomial constant(CtxPtr ctx, const Rational& c) { return Polynomial(ctx, c); }

    const CtxPtr& ctx() const { return ctx_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;  // nullopt when non-constant

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    Polynomial term_multiplied(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;

    void add_term(const Monomial& m, const Rational& c);

    uint64_t total_degree() const;  // 0 for the zero polynomial
    uint32_t degree_in(int var) const;
    bool depends_on(int var) const;
    std::vector<int> support_vars() const;
    Polynomial derivative(int var) const;

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const;

    // Scale so coefficients are coprime integers and the order-leading
    // coefficient is positive. Canonical generator form for emission.
    Polynomial primitive_normalized(const MonomialOrder& order) const;
    // Scale so the order-leading coefficient is 1.
    Polynomial monic(const MonomialOrder& order) const;

    // Simultaneous substitution; entries with no value keep their variable
    // (which must then exist in dst by name). Values live in dst.
    RationalFunction substituted(
        const CtxPtr& dst, const std::vector<std::optional<RationalFunction>>& values) const;
    // Fast path: substitute a plain value for one variable.
    Polynomial substituted_value(int var, const Rational& value) const;

    // Rename-preserving context transfer: each variable of the support must
    // exist in dst under the same name.
    Polynomial embedded(const CtxPtr& dst) const;

    std::string str(const MonomialOrder& order) const;
    std::string str() const;  // grevlex of own context

    static Polynomial parse(const CtxPtr& ctx, const std::string& text);

private:
    CtxPtr ctx_;
    std::map<Monomial, Rational> terms_;
};

// Quotient of polynomials sharing one context. The denominator is nonzero
// and kept primitive-normalized; a reducible quotient is simplified when the
// division is exact or a monomial/content factor cancels (no general
// multivariate gcd here, and none is needed at this scale).
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(CtxPtr ctx, const Rational& c) {
        return RationalFunction(Polynomial::constant(std::move(ctx), c));
    }
    static RationalFunction variable(CtxPtr ctx, int index) {
        return RationalFunction(Polynomial::variable(std::move(ctx), index));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const CtxPtr& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    const Polynomial& as_polynomial() const;  // throws when denominator is not constant

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    // Exact equality as rational functions (cross multiplication).
    bool equals(const RationalFunction& o) const;

    RationalFunction substituted(
        const CtxPtr& dst, const std::vector<std::optional<RationalFunction>>& values) const;
    RationalFunction embedded(const CtxPtr& dst) const;

    // Evaluate at a full rational point (values indexed per context
    // variable). Throws std::domain_error when the denominator vanishes.
    Rational evaluated(const std::vector<Rational>& point) const;

    std::string str() const;

    static RationalFunction parse(const CtxPtr& ctx, const std::string& text);

private:
    void reduce();

    Polynomial num_, den_;
};

Rational evaluate_polynomial(const Polynomial& p, const std::vector<Rational>& point);

// Exact division p / d under the given order; nullopt when the remainder is
// nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d,
                                       const MonomialOrder& order);

}  // namespace chow
