#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dca/errors.hpp"

namespace dca {

// Exact rational with 64-bit numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) == 1).  Intermediate products use 128 bits;
// a result that does not fit 64 bits after reduction throws.
class Rat {
  public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q" with optional sign on p.
    static Rat parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        Rat r;
        r.assign(n, d);
        return r;
    }

    void assign(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        num_ = (long long)n;
        den_ = (long long)d;
    }

    void normalize() { assign(num_, den_); }

    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_, den_;
};

// Rational extended with +inf / -inf.  Only the operations the solvers
// need are defined; adding opposite infinities throws.
class ExtRat {
  public:
    constexpr ExtRat() : state_(0), v_() {}
    ExtRat(const Rat& v) : state_(0), v_(v) {}
    ExtRat(long long v) : state_(0), v_(v) {}

    static ExtRat pos_inf() {
        ExtRat e;
        e.state_ = 1;
        return e;
    }
    static ExtRat neg_inf() {
        ExtRat e;
        e.state_ = -1;
        return e;
    }

    bool is_pos_inf() const { return state_ == 1; }
    bool is_neg_inf() const { return state_ == -1; }
    bool finite() const { return state_ == 0; }
    const Rat& value() const {
        if (!finite()) throw std::domain_error("value() on infinite ExtRat");
        return v_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.finite() && b.finite()) return ExtRat(a.v_ + b.v_);
        if (a.state_ * b.state_ < 0) throw std::domain_error("inf + -inf");
        ExtRat e;
        e.state_ = a.state_ ? a.state_ : b.state_;
        return e;
    }
    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) { return a + (-b); }
    ExtRat operator-() const {
        ExtRat e;
        e.state_ = -state_;
        e.v_ = -v_;
        return e;
    }
    ExtRat& operator+=(const ExtRat& b) { return *this = *this + b; }

    // Scaling by a positive rational keeps the sign of infinities.
    friend ExtRat operator*(const Rat& c, const ExtRat& a) {
        if (c == Rat(0) && !a.finite()) throw std::domain_error("0 * inf");
        if (!a.finite()) {
            ExtRat e;
            e.state_ = c > Rat(0) ? a.state_ : -a.state_;
            return e;
        }
        return ExtRat(c * a.v_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.state_ != b.state_) return false;
        return a.state_ != 0 || a.v_ == b.v_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.state_ != b.state_) return a.state_ < b.state_;
        return a.state_ == 0 && a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    // "p/q", "inf" or "-inf".
    std::string str() const {
        if (state_ == 1) return "inf";
        if (state_ == -1) return "-inf";
        return v_.str();
    }
    static ExtRat parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

  private:
    int state_;  // -1, 0, +1
    Rat v_;
};

inline Rat Rat::parse(const std::string& s) {
    auto bad = [&] { throw input_error("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) bad();
        long long d = 1;
        if (slash != std::string::npos) {
            d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1) bad();
        }
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return Rat();  // unreachable
}

inline ExtRat ExtRat::parse(const std::string& s) {
    if (s == "inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    return ExtRat(Rat::parse(s));
}

}  // namespace dca
