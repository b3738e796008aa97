#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "weights.hpp"

namespace pathweight {

enum class StepKind { up, level, down };  // U, V, W

inline char step_kind_char(StepKind k) {
    switch (k) {
        case StepKind::up: return 'U';
        case StepKind::level: return 'V';
        case StepKind::down: return 'W';
    }
    return '?';
}

struct Step {
    int dx = 1;
    int dy = 0;
    StepKind kind = StepKind::level;

    friend bool operator==(const Step&, const Step&) = default;
};

/// A (U, V, W) step-set triple. U and V steps rise or stay level; W steps
/// descend. Steps are explored in a fixed order (U before V before W, then by
/// displacement) so path enumeration is lexicographic and reproducible.
struct StepSystem {
    std::string name;
    std::vector<Step> u_steps;
    std::vector<Step> v_steps;
    std::vector<Step> w_steps;

    void validate() const {
        auto check = [](const Step& s, bool down) {
            if (s.dx < 1) throw std::invalid_argument("StepSystem: step dx must be >= 1");
            if (down && s.dy >= 0) throw std::invalid_argument("StepSystem: W step must descend");
            if (!down && s.dy < 0) throw std::invalid_argument("StepSystem: U/V step must not descend");
        };
        for (const auto& s : u_steps) check(s, false);
        for (const auto& s : v_steps) check(s, false);
        for (const auto& s : w_steps) check(s, true);
        auto all = ordered_steps();
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j]) throw std::invalid_argument("StepSystem: duplicate step");
    }

    std::vector<Step> ordered_steps() const {
        std::vector<Step> all;
        all.reserve(u_steps.size() + v_steps.size() + w_steps.size());
        all.insert(all.end(), u_steps.begin(), u_steps.end());
        all.insert(all.end(), v_steps.begin(), v_steps.end());
        all.insert(all.end(), w_steps.begin(), w_steps.end());
        std::stable_sort(all.begin(), all.end(), [](const Step& a, const Step& b) {
            if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            if (a.dx != b.dx) return a.dx < b.dx;
            return a.dy < b.dy;
        });
        return all;
    }
};

struct LatticePath {
    std::vector<Step> steps;
    int width = 0;

    std::string word() const {
        std::string s;
        s.reserve(steps.size());
        for (const auto& st : steps) s += step_kind_char(st.kind);
        return s;
    }
};

/// Lengths of the maximal blocks of consecutive U-steps, in path order.
struct AscentVector {
    std::vector<int> lengths;
    friend bool operator==(const AscentVector&, const AscentVector&) = default;
};

inline AscentVector ascent_vector(std::span<const Step> steps) {
    AscentVector u;
    int run = 0;
    for (const auto& s : steps) {
        if (s.kind == StepKind::up) {
            ++run;
        } else if (run > 0) {
            u.lengths.push_back(run);
            run = 0;
        }
    }
    if (run > 0) u.lengths.push_back(run);
    return u;
}

inline AscentVector ascent_vector(const LatticePath& p) {
    return ascent_vector(std::span<const Step>(p.steps));
}

namespace detail {

struct PathDfs {
    const std::vector<Step>& steps;
    int width;
    // Steepest available descent, as a fraction drop/run; zero when the
    // system has no W step.
    int best_drop = 0;
    int best_run = 1;
    std::vector<Step> current;
    const std::function<void(std::span<const Step>)>& visit;

    PathDfs(const std::vector<Step>& steps_, int width_,
            const std::function<void(std::span<const Step>)>& visit_)
        : steps(steps_), width(width_), visit(visit_) {
        for (const auto& s : steps) {
            if (s.kind != StepKind::down) continue;
            // maximize (-dy)/dx: compare -dy * best_run > best_drop * dx
            if (static_cast<long long>(-s.dy) * best_run > static_cast<long long>(best_drop) * s.dx) {
                best_drop = -s.dy;
                best_run = s.dx;
            }
        }
    }

    bool reachable(int x, int h) const {
        // Prune when the steepest descents cannot bring h back to 0 within
        // the remaining width.
        long long remaining = width - x;
        return static_cast<long long>(h) * best_run <= remaining * best_drop;
    }

    void run(int x, int h) {
        if (x == width) {
            if (h == 0) visit(std::span<const Step>(current));
            return;
        }
        for (const auto& s : steps) {
            int nx = x + s.dx;
            int nh = h + s.dy;
            if (nx > width || nh < 0) continue;
            if (!reachable(nx, nh)) continue;
            current.push_back(s);
            run(nx, nh);
            current.pop_back();
        }
    }
};

}  // namespace detail

/// Depth-first traversal of every path from (0,0) to (width,0) that never
/// dips below the axis, in lexicographic step order. Paths are streamed to
/// the visitor; nothing is materialized.
inline void for_each_path(const StepSystem& system, int width,
                          const std::function<void(std::span<const Step>)>& visit) {
    assert(width >= 0);
    if (width == 0) {
        visit({});
        return;
    }
    auto steps = system.ordered_steps();
    detail::PathDfs dfs(steps, width, visit);
    if (dfs.reachable(0, 0)) dfs.run(0, 0);
}

inline std::vector<LatticePath> enumerate_paths(const StepSystem& system, int width) {
    std::vector<LatticePath> out;
    for_each_path(system, width, [&](std::span<const Step> steps) {
        out.push_back(LatticePath{{steps.begin(), steps.end()}, width});
    });
    return out;
}

/// Path count by dynamic programming over (x, height); the independent
/// oracle for the generator. Not a formula engine.
inline BigInt dp_count(const StepSystem& system, int width) {
    int max_up = 0;
    auto steps = system.ordered_steps();
    for (const auto& s : steps) max_up = std::max(max_up, s.dy);
    int max_h = std::max(max_up, 1) * width;
    std::vector<std::vector<BigInt>> dp(
        static_cast<std::size_t>(width) + 1,
        std::vector<BigInt>(static_cast<std::size_t>(max_h) + 1));
    dp[0][0] = 1;
    for (int x = 0; x < width; ++x)
        for (int h = 0; h <= max_h; ++h) {
            const BigInt& ways = dp[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)];
            if (ways.is_zero()) continue;
            for (const auto& s : steps) {
                int nx = x + s.dx;
                int nh = h + s.dy;
                if (nx > width || nh < 0 || nh > max_h) continue;
                dp[static_cast<std::size_t>(nx)][static_cast<std::size_t>(nh)] += ways;
            }
        }
    return dp[static_cast<std::size_t>(width)][0];
}

enum class FamilyKind { catalan, schroeder, motzkin_odd, motzkin_even, custom };

/// A named path family with its size-to-width map.
struct PathFamily {
    FamilyKind kind = FamilyKind::custom;
    int k = 1;
    StepSystem system;

    static PathFamily catalan(int k) {
        assert(k >= 1);
        PathFamily f;
        f.kind = FamilyKind::catalan;
        f.k = k;
        f.system = StepSystem{"catalan(" + std::to_string(k) + ")",
                              {{1, k, StepKind::up}},
                              {},
                              {{1, -1, StepKind::down}}};
        return f;
    }
    static PathFamily schroeder(int k) {
        assert(k >= 1);
        PathFamily f;
        f.kind = FamilyKind::schroeder;
        f.k = k;
        f.system = StepSystem{"schroeder(" + std::to_string(k) + ")",
                              {{1, k, StepKind::up}},
                              {{2, k - 1, StepKind::level}},
                              {{1, -1, StepKind::down}}};
        return f;
    }
    static PathFamily motzkin_odd(int k) {
        assert(k >= 1 && k % 2 == 1);
        PathFamily f;
        f.kind = FamilyKind::motzkin_odd;
        f.k = k;
        f.system = StepSystem{"motzkin(" + std::to_string(k) + ")",
                              {{1, k, StepKind::up}},
                              {{1, (k - 1) / 2, StepKind::level}},
                              {{1, -1, StepKind::down}}};
        return f;
    }
    // Even k uses doubled vertical units so no fractional coordinates appear.
    static PathFamily motzkin_even(int k) {
        assert(k >= 2 && k % 2 == 0);
        PathFamily f;
        f.kind = FamilyKind::motzkin_even;
        f.k = k;
        f.system = StepSystem{"motzkin(" + std::to_string(k) + ")",
                              {{1, 2 * k, StepKind::up}},
                              {{1, k - 1, StepKind::level}},
                              {{1, -2, StepKind::down}}};
        return f;
    }
    static PathFamily custom(StepSystem system) {
        PathFamily f;
        f.kind = FamilyKind::custom;
        f.k = 0;
        f.system = std::move(system);
        return f;
    }

    int width_of(int n) const {
        switch (kind) {
            case FamilyKind::catalan:
            case FamilyKind::schroeder:
            case FamilyKind::motzkin_even:
                return (k + 1) * n;
            case FamilyKind::motzkin_odd:
                return (k + 1) * n / 2;
            case FamilyKind::custom:
                return n;  // size is the width itself
        }
        return n;
    }

    std::string label() const { return system.name; }
};

/// Which factors of the ascent-length product participate in a weighted sum.
/// The metasylvester mode replaces f entirely: each factor i >= 2 contributes
/// 1 + m * (suffix sum of ascent lengths from i on).
struct ProductMode {
    enum class Kind { full, skip_first, skip_last, metasylvester };
    Kind kind = Kind::full;
    BigRational m = 1;

    static ProductMode full() { return {Kind::full, 1}; }
    static ProductMode skip_first() { return {Kind::skip_first, 1}; }
    static ProductMode skip_last() { return {Kind::skip_last, 1}; }
    static ProductMode metasylvester(BigRational m) { return {Kind::metasylvester, std::move(m)}; }

    std::string label() const {
        switch (kind) {
            case Kind::full: return "full";
            case Kind::skip_first: return "skip-first";
            case Kind::skip_last: return "skip-last";
            case Kind::metasylvester: return "meta:" + m.to_string();
        }
        return "?";
    }

    static ProductMode parse(std::string_view text) {
        if (text == "full") return full();
        if (text == "skip-first") return skip_first();
        if (text == "skip-last") return skip_last();
        if (text.substr(0, 5) == "meta:") return metasylvester(BigRational::parse(text.substr(5)));
        throw std::invalid_argument("unknown product mode '" + std::string(text) + "'");
    }

    friend bool operator==(const ProductMode&, const ProductMode&) = default;
};

/// The designated product over one ascent vector; the empty product is 1.
inline BigRational ascent_product(const AscentVector& u, const WeightSpec& w,
                                  const ProductMode& mode) {
    const auto& a = u.lengths;
    BigRational prod = 1;
    switch (mode.kind) {
        case ProductMode::Kind::full:
            for (int len : a) prod *= w.evaluate(len);
            break;
        case ProductMode::Kind::skip_first:
            for (std::size_t i = 1; i < a.size(); ++i) prod *= w.evaluate(a[i]);
            break;
        case ProductMode::Kind::skip_last:
            for (std::size_t i = 0; i + 1 < a.size(); ++i) prod *= w.evaluate(a[i]);
            break;
        case ProductMode::Kind::metasylvester: {
            long long suffix = 0;
            for (std::size_t i = a.size(); i-- > 1;) {
                suffix += a[i];
                prod *= BigRational(1) + mode.m * BigRational(suffix);
            }
            break;
        }
    }
    return prod;
}

/// Multiplicity of each ascent vector over all paths of the given width.
/// Weighted sums fold this census, so one traversal serves many weights.
inline std::map<std::vector<int>, BigInt> ascent_census(const StepSystem& system, int width) {
    std::map<std::vector<int>, BigInt> census;
    for_each_path(system, width, [&](std::span<const Step> steps) {
        census[ascent_vector(steps).lengths] += 1;
    });
    return census;
}

/// Brute-force weighted sums for several weight specs in one enumeration pass.
inline std::vector<BigRational> weighted_sums(const PathFamily& family, int n,
                                              std::span<const WeightSpec> weights,
                                              const ProductMode& mode) {
    assert(n >= 0);
    auto census = ascent_census(family.system, family.width_of(n));
    std::vector<BigRational> sums(weights.size());
    for (const auto& [lengths, count] : census) {
        AscentVector u{lengths};
        BigRational c{count};
        for (std::size_t i = 0; i < weights.size(); ++i)
            sums[i] += ascent_product(u, weights[i], mode) * c;
    }
    return sums;
}

inline BigRational weighted_sum(const PathFamily& family, int n, const WeightSpec& w,
                                const ProductMode& mode) {
    return weighted_sums(family, n, std::span<const WeightSpec>(&w, 1), mode)[0];
}

inline BigRational count_paths(const PathFamily& family, int n) {
    return weighted_sum(family, n, WeightSpec::ones(), ProductMode::full());
}

}  // namespace pathweight
