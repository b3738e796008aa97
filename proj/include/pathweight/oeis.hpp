#pragma once

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "oeis_fixtures.hpp"
#include "rational.hpp"

namespace pathweight::oeis {

struct BFileEntry {
    long long index = 0;
    BigInt value;
};

inline bool valid_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < 7; ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

inline std::string bfile_url(const std::string& id) {
    return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

/// Parses b-file text: one `index value` pair per line, `#` comments and
/// blank lines ignored. Indices must be strictly increasing; anything
/// malformed is an error, never skipped.
inline std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream iss{std::string(line)};
        std::string idx_tok, val_tok, extra;
        iss >> idx_tok >> val_tok;
        if (val_tok.empty() || (iss >> extra))
            throw BFileParseError("b-file line " + std::to_string(lineno) +
                                  ": expected 'index value'");
        BFileEntry e;
        try {
            std::size_t used = 0;
            e.index = std::stoll(idx_tok, &used);
            if (used != idx_tok.size()) throw std::invalid_argument("trailing junk");
            BigRational v = BigRational::parse(val_tok);
            if (!v.is_integer()) throw std::invalid_argument("non-integer");
            e.value = v.numerator();
        } catch (const std::exception&) {
            throw BFileParseError("b-file line " + std::to_string(lineno) + ": bad numeral");
        }
        if (!entries.empty() && e.index <= entries.back().index)
            throw BFileParseError("b-file line " + std::to_string(lineno) +
                                  ": indices must be strictly increasing");
        entries.push_back(std::move(e));
    }
    return entries;
}

struct HttpResponse {
    int status = 0;
    std::string body;
};

/// Injectable GET transport; tests use fakes, the CLI wires an httplib one.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual std::optional<HttpResponse> get(const std::string& url,
                                            std::chrono::milliseconds timeout) = 0;
};

enum class Source { fetched, cache, fixture };

struct OeisRef {
    std::string id;
    Source source = Source::fixture;
    std::string origin;  // url, cache path, or "bundled"
    std::vector<BFileEntry> terms;
};

struct FetchOptions {
    bool offline = false;
    std::string cache_dir;
    HttpTransport* transport = nullptr;
    std::chrono::milliseconds timeout{10000};
    std::chrono::milliseconds retry_backoff{250};
};

inline std::string cache_path(const std::string& cache_dir, const std::string& id) {
    return cache_dir + "/" + id;
}

/// Resolves a b-file: cache first, then bundled fixtures when offline, then
/// the network (one retry with backoff). Fetched bytes are written back to
/// the cache verbatim.
inline OeisRef fetch_bfile(const std::string& id, const FetchOptions& opt) {
    if (!valid_id(id)) throw std::invalid_argument("bad OEIS id '" + id + "' (want A followed by 6 digits)");
    if (!opt.cache_dir.empty()) {
        std::string path = cache_path(opt.cache_dir, id);
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            return OeisRef{id, Source::cache, path, parse_bfile(buf.str())};
        }
    }
    if (opt.offline) {
        const auto& fixtures = bundled_fixtures();
        auto it = fixtures.find(id);
        if (it != fixtures.end())
            return OeisRef{id, Source::fixture, "bundled", parse_bfile(it->second)};
        throw OeisFetchError("offline: " + id + " is neither cached nor bundled");
    }
    if (!opt.transport) throw OeisFetchError("no HTTP transport configured");
    std::string url = bfile_url(id);
    std::optional<HttpResponse> resp;
    for (int attempt = 0; attempt < 2; ++attempt) {
        if (attempt > 0) std::this_thread::sleep_for(opt.retry_backoff);
        resp = opt.transport->get(url, opt.timeout);
        if (resp && resp->status == 200) break;
        resp.reset();
    }
    if (!resp) throw OeisFetchError("fetch failed: " + url);
    auto terms = parse_bfile(resp->body);
    if (!opt.cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opt.cache_dir, ec);
        std::ofstream out(cache_path(opt.cache_dir, id), std::ios::binary);
        out << resp->body;
    }
    return OeisRef{id, Source::fetched, url, std::move(terms)};
}

struct DiffResult {
    int compared = 0;   // overlapping term count
    int match_len = 0;  // leading agreement within the overlap
    struct Mismatch {
        long long n;
        BigRational computed;
        BigInt oeis;
    };
    std::optional<Mismatch> mismatch;
    bool ok() const { return compared > 0 && !mismatch; }
};

/// Compares computed terms (computed[i] is the value at n = i) against OEIS
/// terms, where b-file index n + offset corresponds to term n.
inline DiffResult diff_terms(std::span<const BigRational> computed, const OeisRef& ref,
                             long long offset) {
    DiffResult d;
    for (const auto& e : ref.terms) {
        long long n = e.index - offset;
        if (n < 0 || n >= static_cast<long long>(computed.size())) continue;
        ++d.compared;
        const BigRational& c = computed[static_cast<std::size_t>(n)];
        if (c.is_integer() && c.numerator() == e.value) {
            if (!d.mismatch) ++d.match_len;
        } else if (!d.mismatch) {
            d.mismatch = DiffResult::Mismatch{n, c, e.value};
        }
    }
    return d;
}

}  // namespace pathweight::oeis
