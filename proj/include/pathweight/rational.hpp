#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pathweight {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    BigRational(BigInt v) : num_(std::move(v)), den_(1) {}
    BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    BigRational operator-() const {
        BigRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    BigRational& operator+=(const BigRational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
            return *this;
        }
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ *= o.num_;
            return *this;
        }
        // Cross-reduce before multiplying to keep intermediates small.
        BigInt g1 = boost::multiprecision::gcd(num_, o.den_);
        BigInt g2 = boost::multiprecision::gcd(o.num_, den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        BigRational inv;
        if (o.num_ < 0) {
            inv.num_ = -o.den_;
            inv.den_ = -o.num_;
        } else {
            inv.num_ = o.den_;
            inv.den_ = o.num_;
        }
        return *this *= inv;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Decimal form: "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign.
    static BigRational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return BigRational(parse_int(text));
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        return BigRational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.to_string();
    }

private:
    static BigInt parse_int(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BigRational: empty numeral");
        std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
        if (start == text.size()) throw std::invalid_argument("BigRational: bare sign");
        for (std::size_t i = start; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument("BigRational: bad numeral '" + std::string(text) + "'");
        return BigInt(std::string(text));
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace pathweight
