#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "series.hpp"

namespace pathweight {

/// Weight function f : Z+ -> Q applied to ascent lengths, together with its
/// generating series F(x) = 1 + sum_{l>=1} f(l) x^l.
class WeightSpec {
public:
    enum class Kind { ones, linear, affine_one, affine_two, factorial, table };

    static WeightSpec ones() { return WeightSpec(Kind::ones, 1); }
    static WeightSpec linear(BigRational m) { return WeightSpec(Kind::linear, std::move(m)); }
    static WeightSpec affine_one(BigRational m) { return WeightSpec(Kind::affine_one, std::move(m)); }
    static WeightSpec affine_two() { return WeightSpec(Kind::affine_two, 2); }
    static WeightSpec factorial() { return WeightSpec(Kind::factorial, 0); }
    // table[0] is f(1); lengths beyond the table carry weight 0.
    static WeightSpec table(std::vector<BigRational> values) {
        WeightSpec w(Kind::table, 0);
        w.values_ = std::move(values);
        return w;
    }

    Kind kind() const { return kind_; }
    const BigRational& m() const { return m_; }
    const std::vector<BigRational>& values() const { return values_; }

    BigRational evaluate(int ell) const {
        switch (kind_) {
            case Kind::ones:
                return 1;
            case Kind::linear:
                return m_ * BigRational(ell);
            case Kind::affine_one:
                return BigRational(1) + m_ * BigRational(ell);
            case Kind::affine_two:
                return BigRational(1 + 2LL * ell);
            case Kind::factorial: {
                BigInt f = 1;
                for (int i = 2; i <= ell; ++i) f *= i;
                return BigRational(std::move(f));
            }
            case Kind::table: {
                std::size_t idx = static_cast<std::size_t>(ell - 1);
                return idx < values_.size() ? values_[idx] : BigRational(0);
            }
        }
        return 0;  // unreachable
    }

    /// Returns true when f takes only integer values (drives integrality audits).
    bool integer_valued() const {
        switch (kind_) {
            case Kind::ones:
            case Kind::affine_two:
            case Kind::factorial:
                return true;
            case Kind::linear:
            case Kind::affine_one:
                return m_.is_integer();
            case Kind::table:
                for (const auto& v : values_)
                    if (!v.is_integer()) return false;
                return true;
        }
        return false;
    }

    /// CLI spelling: ones | linear:m | affine:m | affine2 | factorial | table:a,b,c
    std::string label() const {
        switch (kind_) {
            case Kind::ones:
                return "ones";
            case Kind::linear:
                return "linear:" + m_.to_string();
            case Kind::affine_one:
                return "affine:" + m_.to_string();
            case Kind::affine_two:
                return "affine2";
            case Kind::factorial:
                return "factorial";
            case Kind::table: {
                std::string s = "table:";
                for (std::size_t i = 0; i < values_.size(); ++i) {
                    if (i) s += ',';
                    s += values_[i].to_string();
                }
                return s;
            }
        }
        return "?";
    }

    static WeightSpec parse(std::string_view text) {
        if (text == "ones") return ones();
        if (text == "affine2") return affine_two();
        if (text == "factorial") return factorial();
        auto colon = text.find(':');
        if (colon != std::string_view::npos) {
            std::string_view head = text.substr(0, colon);
            std::string_view rest = text.substr(colon + 1);
            if (head == "linear") return linear(BigRational::parse(rest));
            if (head == "affine") return affine_one(BigRational::parse(rest));
            if (head == "table") {
                std::vector<BigRational> vals;
                while (!rest.empty()) {
                    auto comma = rest.find(',');
                    vals.push_back(BigRational::parse(rest.substr(0, comma)));
                    if (comma == std::string_view::npos) break;
                    rest = rest.substr(comma + 1);
                }
                return table(std::move(vals));
            }
        }
        throw std::invalid_argument("unknown weight spec '" + std::string(text) + "'");
    }

    friend bool operator==(const WeightSpec& a, const WeightSpec& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_ && a.values_ == b.values_;
    }

private:
    WeightSpec(Kind kind, BigRational m) : kind_(kind), m_(std::move(m)) {}

    Kind kind_;
    BigRational m_;
    std::vector<BigRational> values_;
};

/// F(x) = 1 + sum_{l=1..N} f(l) x^l, truncated at order N.
inline TruncatedSeries weight_series(const WeightSpec& spec, int order) {
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int ell = 1; ell <= order; ++ell)
        c[static_cast<std::size_t>(ell)] = spec.evaluate(ell);
    return TruncatedSeries(std::move(c));
}

/// Rational function num(x)/den(x) as coefficient vectors, low degree first.
struct RationalFunction {
    std::vector<BigRational> num;
    std::vector<BigRational> den;

    TruncatedSeries expand(int order) const {
        auto pad = [order](const std::vector<BigRational>& p) {
            std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
            for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(order); ++i)
                c[i] = p[i];
            return TruncatedSeries(std::move(c));
        };
        return mul(pad(num), reciprocal(pad(den)));
    }
};

/// Closed rational form of F(x) where one exists. Factorial has no rational
/// ordinary generating function; tables are reported as closed-form-free too.
inline std::optional<RationalFunction> closed_F(const WeightSpec& spec) {
    const BigRational& m = spec.m();
    switch (spec.kind()) {
        case WeightSpec::Kind::ones:
            // 1/(1-x)
            return RationalFunction{{1}, {1, -1}};
        case WeightSpec::Kind::linear:
            // 1 + m x/(1-x)^2 = (1 + (m-2)x + x^2) / (1-x)^2
            return RationalFunction{{1, m - BigRational(2), 1}, {1, -2, 1}};
        case WeightSpec::Kind::affine_one:
            // (1 + (m-1)x) / (1-x)^2
            return RationalFunction{{1, m - BigRational(1)}, {1, -2, 1}};
        case WeightSpec::Kind::affine_two:
            // (1+x)/(1-x)^2
            return RationalFunction{{1, 1}, {1, -2, 1}};
        case WeightSpec::Kind::factorial:
        case WeightSpec::Kind::table:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pathweight
