#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chow {

// Exact rational scalar. Always canonical: gcd(num, den) = 1, den > 0.
// mpq_class maintains that invariant as long as values are canonicalized on
// construction, which every constructor here does.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(parse(s).v_) {}

    static Rational parse(const std::string& s) {
        Rational r;
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                r.v_ = mpq_class(mpz_class(s));
            } else {
                mpz_class num(s.substr(0, slash));
                mpz_class den(s.substr(slash + 1));
                if (den == 0) throw std::domain_error("rational with zero denominator");
                r.v_ = mpq_class(num) / mpq_class(den);
            }
        } catch (const std::invalid_argument&) {
            throw std::domain_error("malformed rational: " + s);
        }
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        return Rational(mpq_class(1 / v_));
    }
    Rational pow(unsigned e) const {
        mpq_class r(1), b(v_);
        for (unsigned k = e; k; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return Rational(r);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // "a" when integral, "a/b" otherwise; sign leads the numerator.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace chow
