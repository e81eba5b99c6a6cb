#include "chowlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chow {

Polynomial::Polynomial(CtxPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero()) terms_[Monomial(ctx_->total(), 0)] = c;
}

Polynomial Polynomial::variable(CtxPtr ctx, int index) {
    Polynomial p(ctx);
    if (index < 0 || index >= ctx->total()) throw std::out_of_range("variable index");
    Monomial m(ctx->total(), 0);
    m[index] = 1;
    p.terms_[m] = Rational(1);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_is_one(terms_.begin()->first);
}

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(ctx_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const { return terms_ == o.terms_; }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Polynomial Polynomial::term_multiplied(const Monomial& m, const Rational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [mm, v] : terms_) r.terms_[mono_mul(mm, m)] = v * c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(ctx_, Rational(1));
    Polynomial b = *this;
    for (unsigned k = e; k; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

uint64_t Polynomial::total_degree() const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

uint32_t Polynomial::degree_in(int var) const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

bool Polynomial::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var]) return true;
    return false;
}

std::vector<int> Polynomial::support_vars() const {
    std::vector<int> out;
    for (int i = 0; i < ctx_->total(); ++i)
        if (depends_on(i)) out.push_back(i);
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (!m[var]) continue;
        Monomial mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * Rational((long)m[var]));
    }
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
}

Polynomial Polynomial::primitive_normalized(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : terms_) {
        den_lcm = lcm(den_lcm, c.denominator());
        num_gcd = gcd(num_gcd, c.numerator());
    }
    Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    if (leading_term(order).second.sign() < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return scaled(leading_term(order).second.inv());
}

Polynomial Polynomial::substituted_value(int var, const Rational& value) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (!m[var]) {
            r.add_term(m, c);
            continue;
        }
        Monomial mm = m;
        uint32_t e = mm[var];
        mm[var] = 0;
        r.add_term(mm, c * value.pow(e));
    }
    return r;
}

Polynomial Polynomial::embedded(const CtxPtr& dst) const {
    if (ctx_->same_names(*dst)) {
        Polynomial r = *this;
        const_cast<CtxPtr&>(r.ctx_) = dst;
        return r;
    }
    std::vector<int> map(ctx_->total(), -1);
    for (int i = 0; i < ctx_->total(); ++i)
        if (auto j = dst->index_of(ctx_->name(i))) map[i] = *j;
    Polynomial r(dst);
    for (const auto& [m, c] : terms_) {
        Monomial mm(dst->total(), 0);
        for (int i = 0; i < (int)m.size(); ++i) {
            if (!m[i]) continue;
            if (map[i] < 0)
                throw std::invalid_argument("variable " + ctx_->name(i) +
                                            " does not exist in the target context");
            mm[map[i]] += m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

namespace {

// Power cache used by one substitution pass.
struct PowCache {
    std::map<std::pair<int, uint32_t>, RationalFunction> rf;
    std::map<std::pair<int, uint32_t>, Polynomial> poly;
};

}  // namespace

RationalFunction Polynomial::substituted(
    const CtxPtr& dst, const std::vector<std::optional<RationalFunction>>& values) const {
    if ((int)values.size() != ctx_->total())
        throw std::invalid_argument("substitution table size mismatch");

    bool all_poly = true;
    for (const auto& v : values)
        if (v && !v->is_polynomial()) all_poly = false;

    std::vector<int> keep(ctx_->total(), -1);
    for (int i = 0; i < ctx_->total(); ++i) {
        if (values[i]) continue;
        auto j = dst->index_of(ctx_->name(i));
        if (!j)
            throw std::invalid_argument("variable " + ctx_->name(i) +
                                        " has no value and no target slot");
        keep[i] = *j;
    }

    PowCache cache;
    if (all_poly) {
        Polynomial acc(dst);
        for (const auto& [m, c] : terms_) {
            Polynomial term = Polynomial::constant(dst, c);
            Monomial passthrough(dst->total(), 0);
            for (int i = 0; i < (int)m.size(); ++i) {
                if (!m[i]) continue;
                if (keep[i] >= 0) {
                    passthrough[keep[i]] += m[i];
                    continue;
                }
                auto key = std::make_pair(i, m[i]);
                auto it = cache.poly.find(key);
                if (it == cache.poly.end())
                    it = cache.poly.emplace(key, values[i]->num().pow(m[i])).first;
                term = term * it->second;
            }
            acc += term.term_multiplied(passthrough, Rational(1));
        }
        return RationalFunction(acc);
    }

    RationalFunction acc{Polynomial(dst)};
    for (const auto& [m, c] : terms_) {
        RationalFunction term = RationalFunction::constant(dst, c);
        for (int i = 0; i < (int)m.size(); ++i) {
            if (!m[i]) continue;
            if (keep[i] >= 0) {
                Polynomial v = Polynomial::variable(dst, keep[i]).pow(m[i]);
                term = term * RationalFunction(v);
                continue;
            }
            auto key = std::make_pair(i, m[i]);
            auto it = cache.rf.find(key);
            if (it == cache.rf.end()) {
                RationalFunction p = *values[i];
                RationalFunction powed = RationalFunction::constant(dst, Rational(1));
                for (uint32_t k = 0; k < m[i]; ++k) powed = powed * p;
                it = cache.rf.emplace(key, powed).first;
            }
            term = term * it->second;
        }
        acc = acc + term;
    }
    return acc;
}

Rational evaluate_polynomial(const Polynomial& p, const std::vector<Rational>& point) {
    if ((int)point.size() != p.ctx()->total())
        throw std::invalid_argument("evaluation point size mismatch");
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < (int)m.size(); ++i)
            if (m[i]) t *= point[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d,
                                       const MonomialOrder& order) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q(p.ctx());
    Polynomial r = p;
    auto [dlm, dlc] = d.leading_term(order);
    while (!r.is_zero()) {
        auto [rlm, rlc] = r.leading_term(order);
        if (!mono_divides(dlm, rlm)) return std::nullopt;
        Monomial qm = mono_div(rlm, dlm);
        Rational qc = rlc / dlc;
        q.add_term(qm, qc);
        r -= d.term_multiplied(qm, qc);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Printing

std::string Polynomial::str(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return order.greater(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = !mono_is_one(m);
        if (!mag.is_one() || !has_vars) {
            out << mag.str();
            if (has_vars) out << "*";
        }
        // parameters print first within a term, as part of the coefficient
        bool first_var = true;
        auto emit = [&](int i) {
            if (!first_var) out << "*";
            first_var = false;
            out << ctx_->name(i);
            if (m[i] > 1) out << "^" << m[i];
        };
        for (int i = 0; i < (int)m.size(); ++i)
            if (m[i] && ctx_->is_param_index(i)) emit(i);
        for (int i = 0; i < (int)m.size(); ++i)
            if (m[i] && !ctx_->is_param_index(i)) emit(i);
    }
    return out.str();
}

std::string Polynomial::str() const { return str(MonomialOrder::grevlex(*ctx_)); }

// ---------------------------------------------------------------------------
// Parsing. The documented grammar is
//   expr := term (('+'|'-') term)*
//   term := factor (('*'|'/') factor)*      ('/' forms rational functions)
//   factor := '-' factor | primary ('^' uint)?
//   primary := uint | name | '(' expr ')'
// which is a superset of the emitted polynomial format.

namespace {

struct Parser {
    const CtxPtr& ctx;
    const std::string& s;
    size_t pos = 0;

    Parser(const CtxPtr& c, const std::string& text) : ctx(c), s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    msg + " in \"" + s + "\"");
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/'))
                acc = acc / factor();
            else
                break;
        }
        return acc;
    }

    RationalFunction factor() {
        if (eat('-')) return -factor();
        RationalFunction base = primary();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected exponent");
            unsigned long e = std::stoul(s.substr(start, pos - start));
            RationalFunction acc = RationalFunction::constant(ctx, Rational(1));
            for (unsigned long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    RationalFunction primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFunction inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos < s.size() && s[pos] == '.') fail("decimal literals are not supported");
            return RationalFunction::constant(ctx,
                                              Rational(mpq_class(s.substr(start, pos - start))));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto idx = ctx->index_of(name);
            if (!idx) fail("unknown variable " + name);
            return RationalFunction::variable(ctx, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RationalFunction RationalFunction::parse(const CtxPtr& ctx, const std::string& text) {
    Parser p(ctx, text);
    RationalFunction r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Polynomial Polynomial::parse(const CtxPtr& ctx, const std::string& text) {
    RationalFunction r = RationalFunction::parse(ctx, text);
    if (!r.is_polynomial())
        throw std::invalid_argument("expected a polynomial, got denominator " + r.den().str() +
                                    " in \"" + text + "\"");
    return r.as_polynomial();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.ctx(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

bool RationalFunction::is_polynomial() const { return den_.is_constant(); }

const Polynomial& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
    return num_;  // reduce() scales constant denominators away
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ctx(), Rational(1));
        return;
    }
    // Cancel the common monomial factor.
    Monomial common(num_.ctx()->total(), 0);
    bool first = true;
    auto feed = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            if (first) {
                common = m;
                first = false;
            } else {
                for (size_t i = 0; i < common.size(); ++i)
                    common[i] = std::min(common[i], m[i]);
            }
        }
    };
    feed(num_);
    feed(den_);
    if (!mono_is_one(common)) {
        auto strip = [&](const Polynomial& p) {
            Polynomial r(p.ctx());
            for (const auto& [m, c] : p.terms()) r.add_term(mono_div(m, common), c);
            return r;
        };
        num_ = strip(num_);
        den_ = strip(den_);
    }
    // Constant denominator folds into the numerator.
    if (den_.is_constant()) {
        num_ = num_.scaled(den_.constant_value()->inv());
        den_ = Polynomial::constant(num_.ctx(), Rational(1));
        return;
    }
    MonomialOrder ord = MonomialOrder::grevlex(*num_.ctx());
    if (auto q = divide_exact(num_, den_, ord)) {
        num_ = *q;
        den_ = Polynomial::constant(num_.ctx(), Rational(1));
        return;
    }
    // Display normalization: integer coefficients on both sides, contents
    // coprime, positive leading coefficient on the denominator.
    mpz_class den_lcm(1);
    auto feed_den = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.denominator());
    };
    feed_den(num_);
    feed_den(den_);
    if (den_lcm != 1) {
        Rational s((mpq_class(den_lcm)));
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
    mpz_class content(0);
    auto feed_content = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) content = gcd(content, c.numerator());
    };
    feed_content(num_);
    feed_content(den_);
    if (content > 1) {
        Rational s(mpq_class(1) / mpq_class(content));
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
    if (den_.leading_term(ord).second.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::substituted(
    const CtxPtr& dst, const std::vector<std::optional<RationalFunction>>& values) const {
    RationalFunction n = num_.substituted(dst, values);
    RationalFunction d = den_.substituted(dst, values);
    if (d.is_zero())
        throw std::domain_error("substitution sends a denominator to zero");
    return n / d;
}

RationalFunction RationalFunction::embedded(const CtxPtr& dst) const {
    return RationalFunction(num_.embedded(dst), den_.embedded(dst));
}

Rational RationalFunction::evaluated(const std::vector<Rational>& point) const {
    Rational d = evaluate_polynomial(den_, point);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
    return evaluate_polynomial(num_, point) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chow
