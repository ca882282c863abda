#ifndef PETINDUCE_FIELD_HPP
#define PETINDUCE_FIELD_HPP

// Exact arithmetic in Q(phi), phi = (1+sqrt(5))/2, over the basis (1, phi).
// All comparisons are decided exactly; no floating point in any decision path.

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace petinduce {

using Rational = mpq_class;  // always reduced, denominator > 0

class FieldElem {
public:
    FieldElem() : a_(0), b_(0) {}
    FieldElem(long v) : a_(v), b_(0) {}            // NOLINT(google-explicit-constructor)
    FieldElem(int v) : a_(v), b_(0) {}             // NOLINT(google-explicit-constructor)
    FieldElem(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT
    FieldElem(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static FieldElem phi() { return FieldElem(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    FieldElem operator+(const FieldElem& o) const { return {a_ + o.a_, b_ + o.b_}; }
    FieldElem operator-(const FieldElem& o) const { return {a_ - o.a_, b_ - o.b_}; }
    FieldElem operator-() const { return {-a_, -b_}; }

    // (a1 + b1 phi)(a2 + b2 phi) reduced modulo phi^2 = phi + 1.
    FieldElem operator*(const FieldElem& o) const {
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }

    // 1/(a + b phi) = (a + b - b phi) / (a^2 + ab - b^2).
    FieldElem inverse() const {
        Rational n = a_ * a_ + a_ * b_ - b_ * b_;
        if (n == 0) throw GeometryError("FieldElem: division by zero");
        return {(a_ + b_) / n, -b_ / n};
    }
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    // Sign of the real number a + b (1+sqrt5)/2.  With u = 2a+b, v = b the
    // value has the sign of u + v sqrt5; when u and v disagree, compare
    // u^2 against 5 v^2.
    int sign() const {
        Rational u = 2 * a_ + b_;
        const Rational& v = b_;
        int su = sgn(u), sv = sgn(v);
        if (su == 0 && sv == 0) return 0;
        if (su >= 0 && sv >= 0) return 1;
        if (su <= 0 && sv <= 0) return -1;
        int d = sgn(u * u - 5 * v * v);
        return su > 0 ? d : -d;
    }

    bool operator==(const FieldElem& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FieldElem& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const FieldElem& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const FieldElem& o) const { return (*this - o).sign() >= 0; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    // Unique n with n <= x < n+1; integer bracketing seeded from a double
    // approximation, corrected by the exact sign predicate.
    mpz_class floor() const {
        double approx = a_.get_d() + b_.get_d() * 1.6180339887498949;
        mpz_class n(approx < 0 ? approx - 2 : approx);
        while (*this >= FieldElem(Rational(n + 1))) n += 1;
        while (*this < FieldElem(Rational(n))) n -= 1;
        return n;
    }

    double to_double() const { return a_.get_d() + b_.get_d() * 1.6180339887498949; }

    // Canonical serialization "p/q+r/s*phi": zero terms omitted, "/1" omitted,
    // unit phi-coefficients written as "phi" / "-phi".
    std::string str() const {
        if (sgn(b_) == 0) return rat_str(a_);
        std::string phi_part;
        if (b_ == 1) {
            phi_part = "phi";
        } else if (b_ == -1) {
            phi_part = "-phi";
        } else {
            phi_part = rat_str(b_) + "*phi";
        }
        if (sgn(a_) == 0) return phi_part;
        if (phi_part[0] == '-') return rat_str(a_) + phi_part;
        return rat_str(a_) + "+" + phi_part;
    }

    // Parse the grammar above (also accepts "3*phi", "-1/2+phi", "7").
    static FieldElem parse(const std::string& s) {
        std::size_t pos = 0;
        FieldElem result = parse_term(s, pos);
        while (pos < s.size()) {
            if (s[pos] != '+' && s[pos] != '-')
                throw ParseError("field element '" + s + "': expected '+' or '-' at position " +
                                 std::to_string(pos));
            bool neg = s[pos] == '-';
            ++pos;
            FieldElem term = parse_term(s, pos);
            result = neg ? result - term : result + term;
        }
        return result;
    }

private:
    static int sgn(const Rational& r) { return ::sgn(r); }

    static std::string rat_str(const Rational& r) {
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }

    // One term: [-] ( "phi" | rational [ "*phi" ] ).
    static FieldElem parse_term(const std::string& s, std::size_t& pos) {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        FieldElem term;
        if (s.compare(pos, 3, "phi") == 0) {
            term = phi();
            pos += 3;
        } else {
            Rational coeff = parse_rational(s, pos);
            term = FieldElem(coeff);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                if (s.compare(pos, 3, "phi") != 0)
                    throw ParseError("field element '" + s + "': expected 'phi' at position " +
                                     std::to_string(pos));
                pos += 3;
                term = FieldElem(Rational(0), coeff);
            }
        }
        return neg ? -term : term;
    }

    static Rational parse_rational(const std::string& s, std::size_t& pos) {
        mpz_class num = parse_integer(s, pos);
        mpz_class den(1);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = parse_integer(s, pos);
            if (den == 0)
                throw ParseError("field element '" + s + "': zero denominator at position " +
                                 std::to_string(pos));
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    static mpz_class parse_integer(const std::string& s, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start)
            throw ParseError("field element '" + s + "': expected digits at position " +
                             std::to_string(start));
        return mpz_class(s.substr(start, pos - start));
    }

    Rational a_;
    Rational b_;
};

inline FieldElem operator+(long x, const FieldElem& y) { return FieldElem(x) + y; }
inline FieldElem operator-(long x, const FieldElem& y) { return FieldElem(x) - y; }
inline FieldElem operator*(long x, const FieldElem& y) { return FieldElem(x) * y; }

}  // namespace petinduce

#endif  // PETINDUCE_FIELD_HPP
