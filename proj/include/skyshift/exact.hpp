#pragma once

// Exact scalar arithmetic over Q and real quadratic extensions Q(sqrt(d)).
// Every coordinate, width and measure in this library is an ExactNum; no
// operation ever consults floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skyshift {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

class exact_error : public std::runtime_error {
public:
    explicit exact_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const BigInt& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

// Floor division, denominator must be positive.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a && a.sign() < 0) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return -floor_div(-a, b);
}

inline BigInt floor_rational(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline Rational rational_pow(const Rational& r, unsigned long e) {
    Rational acc(1);
    Rational base = r;
    while (e != 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

inline BigInt bigint_pow(const BigInt& b, unsigned long e) {
    BigInt acc(1);
    BigInt base = b;
    while (e != 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

// A discriminant must be a square-free integer >= 2 so that sqrt(d) is
// irrational and representations are unique.
inline void validate_discriminant(long d) {
    if (d < 2) throw exact_error("discriminant must be >= 2");
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            throw exact_error("discriminant must be square-free: " + std::to_string(d));
    }
}

enum class Ordering { LT, EQ, GT };

// Element of Q(sqrt(d)): rational_part + radical_part * sqrt(d).
// Values with zero radical part are pure rationals and combine with any
// discriminant; mixing two distinct nonzero discriminants is an error.
class ExactNum {
public:
    ExactNum() = default;
    ExactNum(long v) : rat_(v) {}
    ExactNum(const BigInt& v) : rat_(v) {}
    ExactNum(const Rational& v) : rat_(v) {}
    ExactNum(long num, long den) : rat_(Rational(num, den)) {}
    ExactNum(Rational rational_part, Rational radical_part, long disc)
        : rat_(std::move(rational_part)), rad_(std::move(radical_part)), disc_(disc) {
        if (rad_.sign() == 0) {
            disc_ = 0;
        } else {
            validate_discriminant(disc_);
        }
    }

    static ExactNum sqrt_of(long d) { return ExactNum(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& radical_part() const { return rad_; }
    long discriminant() const { return disc_; }
    bool is_rational() const { return rad_.sign() == 0; }

    // Exact truncation to the rational part is only legal for pure rationals.
    const Rational& as_rational() const {
        if (!is_rational()) throw exact_error("value has a radical part: " + to_string());
        return rat_;
    }

    ExactNum operator-() const { return ExactNum(-rat_, -rad_, disc_, raw_tag{}); }

    friend ExactNum operator+(const ExactNum& a, const ExactNum& b) {
        long d = merged_disc(a, b);
        return ExactNum(a.rat_ + b.rat_, a.rad_ + b.rad_, d, raw_tag{});
    }
    friend ExactNum operator-(const ExactNum& a, const ExactNum& b) {
        long d = merged_disc(a, b);
        return ExactNum(a.rat_ - b.rat_, a.rad_ - b.rad_, d, raw_tag{});
    }
    friend ExactNum operator*(const ExactNum& a, const ExactNum& b) {
        long d = merged_disc(a, b);
        Rational rat = a.rat_ * b.rat_ + a.rad_ * b.rad_ * d;
        Rational rad = a.rat_ * b.rad_ + a.rad_ * b.rat_;
        return ExactNum(std::move(rat), std::move(rad), d, raw_tag{});
    }
    friend ExactNum operator/(const ExactNum& a, const ExactNum& b) {
        long d = merged_disc(a, b);
        if (b.rat_.sign() == 0 && b.rad_.sign() == 0)
            throw exact_error("division by zero");
        // Multiply by the conjugate; the norm is nonzero because d is not a
        // rational square.
        Rational norm = b.rat_ * b.rat_ - b.rad_ * b.rad_ * d;
        Rational rat = (a.rat_ * b.rat_ - a.rad_ * b.rad_ * d) / norm;
        Rational rad = (a.rad_ * b.rat_ - a.rat_ * b.rad_) / norm;
        return ExactNum(std::move(rat), std::move(rad), d, raw_tag{});
    }

    ExactNum& operator+=(const ExactNum& o) { return *this = *this + o; }
    ExactNum& operator-=(const ExactNum& o) { return *this = *this - o; }
    ExactNum& operator*=(const ExactNum& o) { return *this = *this * o; }
    ExactNum& operator/=(const ExactNum& o) { return *this = *this / o; }

    // Sign of rat + rad*sqrt(d), decided by exact squaring.
    int sign() const {
        int sa = rat_.sign();
        int sb = rad_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = rat_ * rat_;
        Rational rhs = rad_ * rad_ * disc_;
        if (lhs == rhs) return 0;  // unreachable for square-free d
        return lhs > rhs ? sa : sb;
    }

    bool is_zero() const { return rat_.sign() == 0 && rad_.sign() == 0; }

    friend bool operator==(const ExactNum& a, const ExactNum& b) {
        if (a.rat_ != b.rat_ || a.rad_ != b.rad_) return false;
        if (a.rad_.sign() != 0 && a.disc_ != b.disc_)
            throw exact_error("comparing values from different quadratic fields");
        return true;
    }
    friend bool operator!=(const ExactNum& a, const ExactNum& b) { return !(a == b); }
    friend bool operator<(const ExactNum& a, const ExactNum& b) { return (a - b).sign() < 0; }
    friend bool operator>(const ExactNum& a, const ExactNum& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const ExactNum& a, const ExactNum& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const ExactNum& a, const ExactNum& b) { return (a - b).sign() >= 0; }

    // Greatest integer <= value under the real embedding.
    BigInt floor() const {
        BigInt guess = floor_rational(rat_) + radical_floor();
        // The guess errs by at most one in each direction.
        while (*this >= ExactNum(guess + 1)) ++guess;
        while (*this < ExactNum(guess)) --guess;
        return guess;
    }

    // Canonical text form: "p/q" or "p/q+r/s*sqrt(d)" / "p/q-r/s*sqrt(d)",
    // lowest terms, no spaces.
    std::string to_string() const {
        std::string s = rat_str(rat_);
        if (rad_.sign() != 0) {
            s += rad_.sign() > 0 ? "+" : "-";
            s += rat_str(abs(rad_));
            s += "*sqrt(" + std::to_string(disc_) + ")";
        }
        return s;
    }

    static ExactNum parse(std::string_view text);

private:
    struct raw_tag {};
    ExactNum(Rational rat, Rational rad, long disc, raw_tag)
        : rat_(std::move(rat)), rad_(std::move(rad)), disc_(rad_.sign() == 0 ? 0 : disc) {}

    static long merged_disc(const ExactNum& a, const ExactNum& b) {
        if (a.disc_ == 0) return b.disc_;
        if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
        throw exact_error("mismatched discriminants: " + std::to_string(a.disc_) + " vs " +
                          std::to_string(b.disc_));
    }

    static std::string rat_str(const Rational& q) {
        return numerator(q).str() + "/" + denominator(q).str();
    }

    // floor(rad * sqrt(d)) via integer square roots.
    BigInt radical_floor() const {
        if (rad_.sign() == 0) return 0;
        BigInt p = numerator(rad_);
        BigInt q = denominator(rad_);
        if (p.sign() > 0) {
            BigInt s = sqrt(BigInt(p * p * disc_));
            return floor_div(s, q);
        }
        BigInt pa = -p;
        BigInt target = pa * pa * disc_;
        BigInt s = sqrt(target);
        if (s * s == target) return -ceil_div(s, q);
        return -(floor_div(s, q) + 1);
    }

    Rational rat_;
    Rational rad_;
    long disc_ = 0;
};

inline Ordering compare(const ExactNum& a, const ExactNum& b) {
    int s = (a - b).sign();
    return s < 0 ? Ordering::LT : (s == 0 ? Ordering::EQ : Ordering::GT);
}

inline ExactNum abs(const ExactNum& x) { return x.sign() < 0 ? -x : x; }
inline const ExactNum& min(const ExactNum& a, const ExactNum& b) { return b < a ? b : a; }
inline const ExactNum& max(const ExactNum& a, const ExactNum& b) { return a < b ? b : a; }

namespace detail {

inline BigInt parse_integer(std::string_view& s) {
    size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw exact_error("expected integer in number literal");
    BigInt v(std::string(s.substr(start, i - start)));
    s.remove_prefix(i);
    return negative ? BigInt(-v) : v;
}

inline Rational parse_rational_token(std::string_view& s) {
    BigInt num = parse_integer(s);
    BigInt den = 1;
    if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        den = parse_integer(s);
        if (den.sign() <= 0) throw exact_error("denominator must be positive");
    }
    return Rational(num, den);
}

}  // namespace detail

inline ExactNum ExactNum::parse(std::string_view text) {
    std::string_view s = text;
    Rational rat = detail::parse_rational_token(s);
    if (s.empty()) return ExactNum(rat);
    if (s.front() != '+' && s.front() != '-')
        throw exact_error("malformed number literal: " + std::string(text));
    Rational rad = detail::parse_rational_token(s);
    constexpr std::string_view kSqrt = "*sqrt(";
    if (s.substr(0, kSqrt.size()) != kSqrt)
        throw exact_error("malformed radical in: " + std::string(text));
    s.remove_prefix(kSqrt.size());
    BigInt d = detail::parse_integer(s);
    if (s != ")") throw exact_error("malformed radical in: " + std::string(text));
    return ExactNum(rat, rad, static_cast<long>(d));
}

}  // namespace skyshift
