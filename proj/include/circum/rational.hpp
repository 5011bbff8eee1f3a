#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace circum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision parts, always stored reduced with
/// a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const { return {-num_, den_}; }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    // Denominators are positive, so cross-multiplication preserves order.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }
    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    /// Parses "a", "a/b" or a decimal such as "0.4" exactly.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        try {
            if (auto slash = text.find('/'); slash != std::string::npos)
                return {BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))};
            if (auto dot = text.find('.'); dot != std::string::npos) {
                std::string digits = text.substr(0, dot) + text.substr(dot + 1);
                if (digits.empty() || digits == "-") throw std::invalid_argument("bad decimal");
                BigInt den = 1;
                for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
                return {BigInt(digits), den};
            }
            return {BigInt(text), BigInt(1)};
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational literal '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace circum
