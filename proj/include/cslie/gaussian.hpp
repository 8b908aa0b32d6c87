#ifndef CSLIE_GAUSSIAN_HPP
#define CSLIE_GAUSSIAN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cslie/rational.hpp"

namespace cslie {

// Element of Q(i), the scalar field of the whole library.
struct GaussRat {
    Rational re, im;

    GaussRat() = default;
    GaussRat(long long n) : re(n) {}
    GaussRat(const Rational& r) : re(r) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rational norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    GaussRat operator-() const { return GaussRat(-re, -im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        // scalars are usually real; shortcut the extra multiplications
        if (a.im.is_zero()) {
            if (b.im.is_zero()) return GaussRat(a.re * b.re);
            return GaussRat(a.re * b.re, a.re * b.im);
        }
        if (b.im.is_zero()) return GaussRat(a.re * b.re, a.im * b.re);
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) throw std::domain_error("GaussRat: division by zero");
        Rational n = b.norm();
        GaussRat p = a * b.conj();
        return GaussRat(p.re / n, p.im / n);
    }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }

    GaussRat inv() const { return GaussRat(Rational(1)) / *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
    // Lexicographic order: only used to keep containers deterministic.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    // Canonical text form: "3/2", "3/2+1/2i", "-i", "2i", "0".
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string imtok;
        Rational ia = im.abs();
        if (ia.is_one())
            imtok = "i";
        else
            imtok = ia.str() + "i";
        if (re.is_zero()) return (im.is_negative() ? "-" : "") + imtok;
        return re.str() + (im.is_negative() ? "-" : "+") + imtok;
    }

    static GaussRat parse(const std::string& text);
};

// Parses the scalar text format: "a/b", "a/b+c/d i", "c/d i", with optional
// leading sign; "1" and "i" accepted; whitespace has no significance.
inline GaussRat GaussRat::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("scalar: empty");

    // Split into one or two signed parts: sign boundaries are '+'/'-' not at
    // position 0 and not following '/'.
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' &&
            s[i - 1] != '-') {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw std::invalid_argument("scalar: too many terms in '" + text + "'");

    Rational re(0), im(0);
    bool seen_re = false, seen_im = false;
    for (const std::string& p : parts) {
        if (p.empty()) throw std::invalid_argument("scalar: empty term");
        bool imag = p.back() == 'i';
        std::string body = imag ? p.substr(0, p.size() - 1) : p;
        if (body.empty() || body == "+")
            body = "1";
        else if (body == "-")
            body = "-1";
        Rational v = Rational::parse(body);
        if (imag) {
            if (seen_im) throw std::invalid_argument("scalar: repeated imaginary part");
            im = v;
            seen_im = true;
        } else {
            if (seen_re) throw std::invalid_argument("scalar: repeated real part");
            re = v;
            seen_re = true;
        }
    }
    return GaussRat(re, im);
}

} // namespace cslie

#endif
