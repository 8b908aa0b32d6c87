#ifndef CSLIE_RATIONAL_HPP
#define CSLIE_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cslie {

// Exact rational number. Values that fit in int64 numerator/denominator are
// kept inline; anything larger is promoted to a heap-allocated mpq. All
// representations are canonical: den > 0, gcd(|num|, den) = 1, and a value
// that fits inline is never stored in the big form.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { set_small(n, d); }
    explicit Rational(const mpq_class& q) { set_big(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    bool is_negative() const { return big_ ? sgn(*big_) < 0 : num_ < 0; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    // Accessors for the inline representation; only valid when small().
    bool small() const { return !big_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
        q.canonicalize();
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.small() && b.small()) {
            if (a.num_ == 0) return b;
            if (b.num_ == 0) return a;
            if (a.den_ == 1 && b.den_ == 1) {
                I128 n = (I128)a.num_ + b.num_;
                if (n <= INT64_MAX && n >= INT64_MIN) {
                    Rational r;
                    r.num_ = (long long)n;
                    return r;
                }
            }
            I128 n = (I128)a.num_ * b.den_ + (I128)b.num_ * a.den_;
            I128 d = (I128)a.den_ * b.den_;
            return from_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.small() && b.small()) {
            I128 n = (I128)a.num_ * b.den_ - (I128)b.num_ * a.den_;
            I128 d = (I128)a.den_ * b.den_;
            return from_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.small() && b.small()) {
            // integer x integer stays reduced; skip the gcd pass
            if (a.den_ == 1 && b.den_ == 1) {
                I128 n = (I128)a.num_ * b.num_;
                if (n <= INT64_MAX && n >= INT64_MIN) {
                    Rational r;
                    r.num_ = (long long)n;
                    return r;
                }
            }
            I128 n = (I128)a.num_ * b.num_;
            I128 d = (I128)a.den_ * b.den_;
            return from_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (a.small() && b.small()) {
            I128 n = (I128)a.num_ * b.den_;
            I128 d = (I128)a.den_ * b.num_;
            return from_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    }
    Rational operator-() const {
        if (small()) {
            if (num_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
            Rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
        return Rational(mpq_class(-*big_));
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
        return a.to_mpq() == b.to_mpq();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.small() && b.small())
            return (I128)a.num_ * b.den_ < (I128)b.num_ * a.den_;
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    // "-3/4", "17", "0"
    std::string str() const {
        if (big_) return big_->get_str();
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static Rational parse(const std::string& s);

private:
    using I128 = __int128;

    long long num_ = 0, den_ = 1;
    std::unique_ptr<mpq_class> big_;

    static I128 iabs(I128 v) { return v < 0 ? -v : v; }

    static I128 gcd128(I128 a, I128 b) {
        a = iabs(a);
        b = iabs(b);
        while (b) {
            I128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(I128 n, I128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        I128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX) {
            Rational r;
            r.num_ = (long long)n;
            r.den_ = (long long)d;
            return r;
        }
        mpq_class q(i128_to_mpz(n), i128_to_mpz(d));
        q.canonicalize();
        return Rational(q);
    }

    static mpz_class i128_to_mpz(I128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
        mpz_class hi((unsigned long)(u >> 64));
        mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    void set_small(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        *this = from_i128(n, d);
    }

    void set_big(const mpq_class& q) {
        mpq_class c(q);
        c.canonicalize();
        if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
            num_ = c.get_num().get_si();
            den_ = c.get_den().get_si();
            big_.reset();
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_unique<mpq_class>(c);
        }
    }
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    size_t slash = s.find('/');
    auto to_mpz = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(t.begin());
        if (t.empty() || (t.size() == 1 && t[0] == '-'))
            throw std::invalid_argument("Rational: bad integer '" + t + "'");
        for (size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            if (!((c >= '0' && c <= '9') || (i == 0 && c == '-')))
                throw std::invalid_argument("Rational: bad integer '" + t + "'");
        }
        return mpz_class(t);
    };
    if (slash == std::string::npos) {
        mpq_class q(to_mpz(s));
        return Rational(q);
    }
    mpz_class n = to_mpz(s.substr(0, slash));
    mpz_class d = to_mpz(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

} // namespace cslie

#endif
