#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "closedforms.hpp"
#include "errors.hpp"
#include "feq.hpp"
#include "paths.hpp"
#include "weights.hpp"

namespace pathweight {

/// CLI family names keep the Motzkin parity split internal: "motzkin" with an
/// even k selects the even family.
inline PathFamily family_from_cli(const std::string& name, int k) {
    if (k < 1) throw std::invalid_argument("family k must be >= 1");
    if (name == "catalan") return PathFamily::catalan(k);
    if (name == "schroeder") return PathFamily::schroeder(k);
    if (name == "motzkin")
        return k % 2 == 1 ? PathFamily::motzkin_odd(k) : PathFamily::motzkin_even(k);
    throw std::invalid_argument("unknown family '" + name + "'");
}

inline std::string family_cli_name(const PathFamily& f) {
    switch (f.kind) {
        case FamilyKind::catalan: return "catalan";
        case FamilyKind::schroeder: return "schroeder";
        case FamilyKind::motzkin_odd:
        case FamilyKind::motzkin_even: return "motzkin";
        case FamilyKind::custom: return "custom";
    }
    return "?";
}

/// True when a closed-form engine covers the configuration.
inline bool formula_available(const PathFamily& f, const WeightSpec& w, const ProductMode& mode) {
    switch (mode.kind) {
        case ProductMode::Kind::full:
            if (f.kind == FamilyKind::motzkin_even) return w.kind() == WeightSpec::Kind::ones;
            return f.kind == FamilyKind::catalan || f.kind == FamilyKind::schroeder ||
                   f.kind == FamilyKind::motzkin_odd;
        case ProductMode::Kind::skip_first:
            // Weight 1+m*l over k-Catalan paths: m=1 for any k, or k=1 for any m.
            if (f.kind != FamilyKind::catalan) return false;
            if (w.kind() == WeightSpec::Kind::affine_one)
                return w.m().is_one() || f.k == 1;
            if (w.kind() == WeightSpec::Kind::affine_two) return f.k == 1;
            return false;
        case ProductMode::Kind::skip_last:
            return f.kind == FamilyKind::catalan && f.k == 1 &&
                   w.kind() == WeightSpec::Kind::affine_one && w.m().is_one();
        case ProductMode::Kind::metasylvester:
            return false;  // open question: brute force only
    }
    return false;
}

inline BigRational formula_term(const PathFamily& f, const WeightSpec& w, const ProductMode& mode,
                                int n) {
    if (!formula_available(f, w, mode))
        throw UnsupportedCombination("no closed form for " + f.label() + " weight " + w.label() +
                                     " mode " + mode.label());
    switch (mode.kind) {
        case ProductMode::Kind::full:
            switch (f.kind) {
                case FamilyKind::catalan: return catalan_closed(f.k, n, w);
                case FamilyKind::schroeder: return schroeder_closed(f.k, n, w);
                case FamilyKind::motzkin_odd: return motzkin_odd_closed(f.k, n, w);
                case FamilyKind::motzkin_even: return motzkin_even_count(f.k, n);
                default: break;
            }
            break;
        case ProductMode::Kind::skip_first: {
            BigRational m = w.kind() == WeightSpec::Kind::affine_two ? BigRational(2) : w.m();
            return catalan_skip_first(f.k, n, m);
        }
        case ProductMode::Kind::skip_last:
            return catalan_skip_last_k1(n);
        case ProductMode::Kind::metasylvester:
            break;
    }
    throw UnsupportedCombination("no closed form for mode " + mode.label());
}

inline bool feq_available(const PathFamily& f, const WeightSpec& w, const ProductMode& mode) {
    if (mode.kind != ProductMode::Kind::full) return false;
    if (f.kind == FamilyKind::motzkin_even) return w.kind() == WeightSpec::Kind::ones;
    return f.kind == FamilyKind::catalan || f.kind == FamilyKind::schroeder ||
           f.kind == FamilyKind::motzkin_odd;
}

/// Terms n = 0..n_max read off the solved master equation (kernel pipeline
/// for even-k Motzkin). Coefficients away from family widths must vanish.
inline std::vector<BigRational> feq_sequence(const PathFamily& f, const WeightSpec& w, int n_max) {
    if (!feq_available(f, w, ProductMode::full()))
        throw UnsupportedCombination("no functional-equation engine for " + f.label() +
                                     " weight " + w.label());
    if (f.kind == FamilyKind::motzkin_even) return kernel_even_motzkin(f.k, n_max);
    int order = f.width_of(n_max);
    MasterSpec spec = family_master_spec(f, w, order);
    TruncatedSeries p = solve_master(spec, order);
    std::vector<BigRational> terms(static_cast<std::size_t>(n_max) + 1);
    int next_width = 0, next_n = 0;
    for (int i = 0; i <= order; ++i) {
        if (i == next_width) {
            terms[static_cast<std::size_t>(next_n)] = p[i];
            ++next_n;
            next_width = f.width_of(next_n);
        } else if (!p[i].is_zero()) {
            throw std::logic_error("feq_sequence: nonzero coefficient at non-width index " +
                                   std::to_string(i));
        }
    }
    return terms;
}

inline std::vector<BigRational> bruteforce_sequence(const PathFamily& f, const WeightSpec& w,
                                                    const ProductMode& mode, int n_max) {
    std::vector<BigRational> terms(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) terms[static_cast<std::size_t>(n)] = weighted_sum(f, n, w, mode);
    return terms;
}

/// A computed sequence with its provenance.
struct SequenceResult {
    std::string family;  // cli name
    int k = 1;
    std::string weight;  // WeightSpec label
    std::string mode;    // ProductMode label
    std::string engine;  // bruteforce | formula | feq | kernel
    int n_min = 0;
    std::vector<BigRational> terms;

    friend bool operator==(const SequenceResult&, const SequenceResult&) = default;
};

// Exact integers and rationals serialize as decimal strings, never floats.
inline void to_json(nlohmann::json& j, const SequenceResult& r) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) terms.push_back(t.to_string());
    j = nlohmann::json{{"family", r.family}, {"k", r.k},         {"weight", r.weight},
                       {"mode", r.mode},     {"engine", r.engine}, {"n_min", r.n_min},
                       {"terms", terms}};
}

inline void from_json(const nlohmann::json& j, SequenceResult& r) {
    j.at("family").get_to(r.family);
    j.at("k").get_to(r.k);
    j.at("weight").get_to(r.weight);
    j.at("mode").get_to(r.mode);
    j.at("engine").get_to(r.engine);
    j.at("n_min").get_to(r.n_min);
    r.terms.clear();
    for (const auto& t : j.at("terms")) r.terms.push_back(BigRational::parse(t.get<std::string>()));
}

// ---------------------------------------------------------------------------
// Multi-engine verification
// ---------------------------------------------------------------------------

/// One row of the verification grid: engine returns its value, or nullopt
/// when the configuration is outside its domain.
struct NamedEngine {
    std::string name;
    std::function<std::optional<BigRational>(const PathFamily&, const WeightSpec&, int n)> term;
};

inline std::vector<NamedEngine> default_engines() {
    std::vector<NamedEngine> engines;
    engines.push_back({"bruteforce", [](const PathFamily& f, const WeightSpec& w, int n) {
                           return std::optional<BigRational>(
                               weighted_sum(f, n, w, ProductMode::full()));
                       }});
    engines.push_back({"formula", [](const PathFamily& f, const WeightSpec& w,
                                     int n) -> std::optional<BigRational> {
                           if (!formula_available(f, w, ProductMode::full())) return std::nullopt;
                           return formula_term(f, w, ProductMode::full(), n);
                       }});
    engines.push_back({"feq", [](const PathFamily& f, const WeightSpec& w,
                                 int n) -> std::optional<BigRational> {
                           if (f.kind == FamilyKind::motzkin_even) return std::nullopt;
                           if (!feq_available(f, w, ProductMode::full())) return std::nullopt;
                           return feq_sequence(f, w, n).back();
                       }});
    engines.push_back({"kernel", [](const PathFamily& f, const WeightSpec& w,
                                    int n) -> std::optional<BigRational> {
                           if (f.kind != FamilyKind::motzkin_even ||
                               w.kind() != WeightSpec::Kind::ones)
                               return std::nullopt;
                           return kernel_even_motzkin(f.k, n).back();
                       }});
    return engines;
}

struct VerifyOptions {
    std::vector<std::string> families = {"catalan", "schroeder", "motzkin"};
    int k_max = 2;
    int n_max = 5;
    std::vector<WeightSpec> weights = {WeightSpec::ones(), WeightSpec::linear(1),
                                       WeightSpec::affine_one(1)};
};

struct VerifyMismatch {
    std::string family;
    int k = 0;
    std::string weight;
    int n = 0;
    std::string engine_a, engine_b;
    BigRational value_a, value_b;
};

/// Runs every applicable engine over the configuration grid, printing one
/// agreement line per (family, k, weight). Returns the first disagreement.
inline std::optional<VerifyMismatch> run_verify(
    const VerifyOptions& opt, std::ostream& out,
    const std::vector<NamedEngine>& engines = default_engines()) {
    std::optional<VerifyMismatch> first;
    for (const auto& name : opt.families) {
        for (int k = 1; k <= opt.k_max; ++k) {
            PathFamily f = family_from_cli(name, k);
            for (const auto& w : opt.weights) {
                std::vector<const NamedEngine*> used;
                bool row_ok = true;
                for (int n = 0; n <= opt.n_max && row_ok; ++n) {
                    std::optional<BigRational> reference;
                    const NamedEngine* ref_engine = nullptr;
                    for (const auto& e : engines) {
                        auto v = e.term(f, w, n);
                        if (!v) continue;
                        if (n == 0 &&
                            std::find(used.begin(), used.end(), &e) == used.end())
                            used.push_back(&e);
                        if (!reference) {
                            reference = v;
                            ref_engine = &e;
                            continue;
                        }
                        if (*v == *reference) continue;
                        row_ok = false;
                        if (!first)
                            first = VerifyMismatch{family_cli_name(f), k,     w.label(), n,
                                                   ref_engine->name,   e.name, *reference, *v};
                        out << "MISMATCH " << family_cli_name(f) << " k=" << k << " weight="
                            << w.label() << " n=" << n << ": " << ref_engine->name << "="
                            << reference->to_string() << " vs " << e.name << "=" << v->to_string()
                            << "\n";
                        break;
                    }
                }
                if (row_ok) {
                    out << "ok " << family_cli_name(f) << " k=" << k << " weight=" << w.label()
                        << " n=0.." << opt.n_max << " engines=";
                    for (std::size_t i = 0; i < used.size(); ++i) {
                        if (i) out << ",";
                        out << used[i]->name;
                    }
                    out << "\n";
                }
            }
        }
    }
    return first;
}

}  // namespace pathweight
