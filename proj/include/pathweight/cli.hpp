#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "engines.hpp"
#include "oeis.hpp"

namespace pathweight::cli {

// Exit codes shared by all subcommands.
constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

struct SeqArgs {
    std::string family = "catalan";
    int k = 1;
    std::string weight = "ones";
    std::string mode = "full";
    std::string engine = "auto";
    int n_max = 10;
    std::string format = "plain";
};

/// Computes and prints one sequence. `auto` prefers a closed form and falls
/// back to brute force, announcing the fallback on the diagnostic stream.
inline int cmd_seq(const SeqArgs& args, std::ostream& out, std::ostream& err) {
    PathFamily family;
    WeightSpec weight = WeightSpec::ones();
    ProductMode mode;
    try {
        family = family_from_cli(args.family, args.k);
        weight = WeightSpec::parse(args.weight);
        mode = ProductMode::parse(args.mode);
        if (args.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
        if (args.format != "plain" && args.format != "json" && args.format != "csv")
            throw std::invalid_argument("unknown format '" + args.format + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    SequenceResult result;
    result.family = args.family;
    result.k = args.k;
    result.weight = weight.label();
    result.mode = mode.label();
    try {
        if (args.engine == "formula") {
            result.engine = "formula";
            for (int n = 0; n <= args.n_max; ++n)
                result.terms.push_back(formula_term(family, weight, mode, n));
        } else if (args.engine == "feq") {
            result.engine = family.kind == FamilyKind::motzkin_even ? "kernel" : "feq";
            result.terms = feq_sequence(family, weight, args.n_max);
        } else if (args.engine == "bruteforce") {
            result.engine = "bruteforce";
            result.terms = bruteforce_sequence(family, weight, mode, args.n_max);
        } else if (args.engine == "auto") {
            if (formula_available(family, weight, mode)) {
                result.engine = "formula";
                for (int n = 0; n <= args.n_max; ++n)
                    result.terms.push_back(formula_term(family, weight, mode, n));
            } else {
                err << "note: no closed form for " << family.label() << " weight "
                    << weight.label() << " mode " << mode.label() << "; using bruteforce\n";
                result.engine = "bruteforce";
                result.terms = bruteforce_sequence(family, weight, mode, args.n_max);
            }
        } else {
            err << "error: unknown engine '" << args.engine << "'\n";
            return exit_usage;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (args.format == "plain") {
        for (std::size_t i = 0; i < result.terms.size(); ++i) {
            if (i) out << ' ';
            out << result.terms[i].to_string();
        }
        out << '\n';
    } else if (args.format == "csv") {
        out << "n,value\n";
        for (std::size_t i = 0; i < result.terms.size(); ++i)
            out << (result.n_min + static_cast<int>(i)) << ',' << result.terms[i].to_string()
                << '\n';
    } else {
        nlohmann::json j = result;
        out << j.dump() << '\n';
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string families = "catalan,schroeder,motzkin";
    int k_max = 2;
    int n_max = 5;
    std::string weights = "ones,linear:1,affine:1";
};

/// Cross-checks every available engine over a configuration grid.
inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err,
                      const std::vector<NamedEngine>& engines = default_engines()) {
    VerifyOptions opt;
    try {
        opt.families = detail::split_list(args.families);
        if (opt.families.empty()) throw std::invalid_argument("--families is empty");
        for (const auto& f : opt.families) family_from_cli(f, 1);  // validate names
        opt.k_max = args.k_max;
        opt.n_max = args.n_max;
        if (opt.k_max < 1 || opt.n_max < 0) throw std::invalid_argument("bad --k-max/--n-max");
        opt.weights.clear();
        for (const auto& w : detail::split_list(args.weights))
            opt.weights.push_back(WeightSpec::parse(w));
        if (opt.weights.empty()) throw std::invalid_argument("--weights is empty");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    auto mismatch = run_verify(opt, out, engines);
    if (!mismatch) {
        out << "all engines agree\n";
        return exit_ok;
    }
    err << "verification failed: " << mismatch->family << " k=" << mismatch->k
        << " weight=" << mismatch->weight << " n=" << mismatch->n << " "
        << mismatch->engine_a << "=" << mismatch->value_a.to_string() << " vs "
        << mismatch->engine_b << "=" << mismatch->value_b.to_string() << "\n";
    return exit_mismatch;
}

struct TableArgs {
    std::string name = "even-motzkin";
};

/// Prints the built-in even-k Motzkin count table (k = 2,4,6,8,10; n = 0..7).
inline int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
    if (args.name != "even-motzkin") {
        err << "error: unknown table '" << args.name << "' (only even-motzkin exists)\n";
        return exit_usage;
    }
    out << "k   |M_n| for 0 <= n <= 7\n";
    for (int k = 2; k <= 10; k += 2) {
        std::string row = std::to_string(k);
        row.append(4 - row.size(), ' ');
        out << row;
        for (int n = 0; n <= 7; ++n) {
            if (n) out << ", ";
            out << motzkin_even_count(k, n).to_string();
        }
        out << '\n';
    }
    return exit_ok;
}

struct OeisArgs {
    std::string id;
    std::string family = "catalan";
    int k = 1;
    std::string weight = "ones";
    std::string mode = "full";
    long long offset = 0;
    bool offline = false;
    std::string cache_dir;
    int n_max = 10;
    oeis::HttpTransport* transport = nullptr;
    std::chrono::milliseconds timeout{10000};
    std::chrono::milliseconds retry_backoff{250};
};

/// Diffs a computed sequence against an OEIS b-file.
inline int cmd_oeis(const OeisArgs& args, std::ostream& out, std::ostream& err) {
    PathFamily family;
    WeightSpec weight = WeightSpec::ones();
    ProductMode mode;
    try {
        if (!oeis::valid_id(args.id))
            throw std::invalid_argument("bad OEIS id '" + args.id + "'");
        family = family_from_cli(args.family, args.k);
        weight = WeightSpec::parse(args.weight);
        mode = ProductMode::parse(args.mode);
        if (args.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    std::vector<BigRational> computed;
    if (formula_available(family, weight, mode)) {
        for (int n = 0; n <= args.n_max; ++n)
            computed.push_back(formula_term(family, weight, mode, n));
    } else {
        computed = bruteforce_sequence(family, weight, mode, args.n_max);
    }

    oeis::OeisRef ref;
    try {
        oeis::FetchOptions opt;
        opt.offline = args.offline;
        opt.cache_dir = args.cache_dir;
        opt.transport = args.transport;
        opt.timeout = args.timeout;
        opt.retry_backoff = args.retry_backoff;
        ref = oeis::fetch_bfile(args.id, opt);
    } catch (const BFileParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const OeisFetchError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const char* source = ref.source == oeis::Source::fetched  ? "fetched"
                         : ref.source == oeis::Source::cache  ? "cache"
                                                              : "fixture";
    auto diff = oeis::diff_terms(computed, ref, args.offset);
    out << args.id << " (" << source << "): compared " << diff.compared << " terms, match length "
        << diff.match_len << "\n";
    if (diff.compared == 0) {
        err << "error: no overlapping terms (offset " << args.offset << ")\n";
        return exit_mismatch;
    }
    if (diff.mismatch) {
        out << "first mismatch at n=" << diff.mismatch->n << ": computed "
            << diff.mismatch->computed.to_string() << ", OEIS " << diff.mismatch->oeis.str()
            << "\n";
        return exit_mismatch;
    }
    out << "match\n";
    return exit_ok;
}

}  // namespace pathweight::cli
