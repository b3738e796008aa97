#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pathweight/cli.hpp"

using namespace pathweight;
using namespace pathweight::cli;

namespace {

namespace fs = std::filesystem;

const std::string kEvenMotzkinTable =
    "k   |M_n| for 0 <= n <= 7\n"
    "2   1, 2, 17, 204, 2848, 43335, 697194, 11663971\n"
    "4   1, 3, 66, 2100, 78399, 3202513, 138606469, 6245691198\n"
    "6   1, 4, 164, 9837, 694906, 53797628, 4416325803, 377628587186\n"
    "8   1, 5, 327, 31515, 3584682, 447231641, 59192155893, 8162250566928\n"
    "10  1, 6, 571, 80482, 13406549, 2450879425, 475440187468, 96106360517372\n";

struct CliRun {
    int code = -1;
    std::string out;
};

// End-to-end run of the installed binary; stderr is folded into stdout.
CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = std::string(PATHWEIGHT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class ServeTransport : public oeis::HttpTransport {
public:
    explicit ServeTransport(std::string body) : body_(std::move(body)) {}
    std::optional<oeis::HttpResponse> get(const std::string&,
                                          std::chrono::milliseconds) override {
        ++calls;
        return oeis::HttpResponse{200, body_};
    }
    int calls = 0;

private:
    std::string body_;
};

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("pathweight_cli_" + std::to_string(std::chrono::steady_clock::now()
                                                       .time_since_epoch()
                                                       .count()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cmd_seq plain output") {
    SeqArgs args;
    args.family = "catalan";
    args.k = 1;
    args.weight = "linear:1";
    args.n_max = 5;
    std::ostringstream out, err;
    CHECK(cmd_seq(args, out, err) == exit_ok);
    CHECK(out.str() == "1 1 3 10 37 146\n");

    SeqArgs one;
    one.n_max = 0;
    std::ostringstream out2, err2;
    CHECK(cmd_seq(one, out2, err2) == exit_ok);
    CHECK(out2.str() == "1\n");
}

TEST_CASE("cmd_seq reproduces the even-Motzkin row") {
    SeqArgs args;
    args.family = "motzkin";
    args.k = 2;
    args.weight = "ones";
    args.n_max = 7;
    std::ostringstream out, err;
    CHECK(cmd_seq(args, out, err) == exit_ok);
    CHECK(out.str() == "1 2 17 204 2848 43335 697194 11663971\n");
}

TEST_CASE("cmd_seq csv and json formats") {
    SeqArgs args;
    args.n_max = 3;
    args.format = "csv";
    std::ostringstream out, err;
    CHECK(cmd_seq(args, out, err) == exit_ok);
    CHECK(out.str() == "n,value\n0,1\n1,1\n2,2\n3,5\n");

    args.format = "json";
    std::ostringstream jout, jerr;
    CHECK(cmd_seq(args, jout, jerr) == exit_ok);
    auto j = nlohmann::json::parse(jout.str());
    auto r = j.get<SequenceResult>();
    CHECK(r.family == "catalan");
    CHECK(r.engine == "formula");
    CHECK(r.terms == std::vector<BigRational>{1, 1, 2, 5});
    // round trip: emitted JSON reconstructs an identical result
    nlohmann::json j2 = r;
    CHECK(j2.get<SequenceResult>() == r);
}

TEST_CASE("cmd_seq engine selection and fallbacks") {
    // even-k Motzkin with a non-ones weight has no formula: auto falls back
    SeqArgs args;
    args.family = "motzkin";
    args.k = 2;
    args.weight = "linear:1";
    args.n_max = 2;
    std::ostringstream out, err;
    CHECK(cmd_seq(args, out, err) == exit_ok);
    CHECK(err.str().find("bruteforce") != std::string::npos);

    // but asking for the formula engine explicitly is a usage error
    args.engine = "formula";
    std::ostringstream out2, err2;
    CHECK(cmd_seq(args, out2, err2) == exit_usage);

    // feq on even motzkin reports the kernel engine
    SeqArgs kern;
    kern.family = "motzkin";
    kern.k = 2;
    kern.engine = "feq";
    kern.n_max = 3;
    kern.format = "json";
    std::ostringstream out3, err3;
    CHECK(cmd_seq(kern, out3, err3) == exit_ok);
    CHECK(nlohmann::json::parse(out3.str())["engine"] == "kernel");

    // metasylvester products have no closed form; brute force handles them
    SeqArgs meta;
    meta.mode = "meta:1";
    meta.n_max = 3;
    std::ostringstream out4, err4;
    CHECK(cmd_seq(meta, out4, err4) == exit_ok);
    CHECK(out4.str() == "1 1 3 14\n");
    meta.engine = "formula";
    std::ostringstream out5, err5;
    CHECK(cmd_seq(meta, out5, err5) == exit_usage);

    SeqArgs bad;
    bad.engine = "quantum";
    std::ostringstream out6, err6;
    CHECK(cmd_seq(bad, out6, err6) == exit_usage);
    bad.engine = "auto";
    bad.n_max = -1;
    std::ostringstream out7, err7;
    CHECK(cmd_seq(bad, out7, err7) == exit_usage);
}

TEST_CASE("cmd_seq skip modes use the shifted-product formulas") {
    SeqArgs args;
    args.weight = "affine:1";
    args.mode = "skip-first";
    args.n_max = 4;
    args.format = "json";
    std::ostringstream out, err;
    CHECK(cmd_seq(args, out, err) == exit_ok);
    auto r = nlohmann::json::parse(out.str()).get<SequenceResult>();
    CHECK(r.engine == "formula");
    for (int n = 0; n <= 4; ++n)
        CHECK(r.terms[static_cast<std::size_t>(n)] ==
              weighted_sum(PathFamily::catalan(1), n, WeightSpec::affine_one(1),
                           ProductMode::skip_first()));
}

TEST_CASE("cmd_table golden output") {
    TableArgs args;
    std::ostringstream out, err;
    CHECK(cmd_table(args, out, err) == exit_ok);
    CHECK(out.str() == kEvenMotzkinTable);

    TableArgs bad{"odd-motzkin"};
    std::ostringstream out2, err2;
    CHECK(cmd_table(bad, out2, err2) == exit_usage);
}

TEST_CASE("cmd_verify default grid passes") {
    VerifyArgs args;
    args.n_max = 4;
    std::ostringstream out, err;
    CHECK(cmd_verify(args, out, err) == exit_ok);
    CHECK(out.str().find("all engines agree") != std::string::npos);

    VerifyArgs bad;
    bad.weights = "sublinear:1";
    std::ostringstream out2, err2;
    CHECK(cmd_verify(bad, out2, err2) == exit_usage);
}

TEST_CASE("cmd_verify flags a corrupted engine") {
    auto engines = default_engines();
    for (auto& e : engines)
        if (e.name == "formula") {
            auto inner = e.term;
            e.term = [inner](const PathFamily& f, const WeightSpec& w,
                             int n) -> std::optional<BigRational> {
                auto v = inner(f, w, n);
                if (v && f.kind == FamilyKind::catalan && n == 2) return *v - BigRational(1);
                return v;
            };
        }
    VerifyArgs args;
    args.n_max = 3;
    std::ostringstream out, err;
    CHECK(cmd_verify(args, out, err, engines) == exit_mismatch);
    CHECK(err.str().find("catalan") != std::string::npos);
    CHECK(err.str().find("n=2") != std::string::npos);
}

TEST_CASE("cmd_oeis offline fixtures") {
    struct Case {
        const char* id;
        const char* family;
        int k;
        const char* weight;
    };
    const Case cases[] = {{"A000108", "catalan", 1, "ones"},
                          {"A001006", "motzkin", 1, "ones"},
                          {"A006318", "schroeder", 1, "ones"},
                          {"A109081", "catalan", 1, "linear:1"}};
    for (const auto& c : cases) {
        OeisArgs args;
        args.id = c.id;
        args.family = c.family;
        args.k = c.k;
        args.weight = c.weight;
        args.offline = true;
        args.n_max = 12;
        std::ostringstream out, err;
        INFO(c.id);
        CHECK(cmd_oeis(args, out, err) == exit_ok);
        CHECK(out.str().find("match") != std::string::npos);
        CHECK(out.str().find("compared 13") != std::string::npos);
    }
}

TEST_CASE("cmd_oeis reports a located mismatch") {
    OeisArgs args;
    args.id = "A000108";
    args.family = "schroeder";  // Schroeder numbers against the Catalan b-file
    args.offline = true;
    args.n_max = 8;
    std::ostringstream out, err;
    CHECK(cmd_oeis(args, out, err) == exit_mismatch);
    CHECK(out.str().find("first mismatch at n=1") != std::string::npos);
}

TEST_CASE("cmd_oeis error paths") {
    OeisArgs bad_id;
    bad_id.id = "A1";
    std::ostringstream out, err;
    CHECK(cmd_oeis(bad_id, out, err) == exit_usage);

    OeisArgs unknown;
    unknown.id = "A999999";
    unknown.offline = true;
    std::ostringstream out2, err2;
    CHECK(cmd_oeis(unknown, out2, err2) == exit_io);

    // network failure with no cache and no transport
    OeisArgs offline_miss;
    offline_miss.id = "A000108";
    offline_miss.offline = false;
    offline_miss.transport = nullptr;
    std::ostringstream out3, err3;
    CHECK(cmd_oeis(offline_miss, out3, err3) == exit_io);

    // corrupt cached bytes are fatal
    TempDir tmp;
    std::ofstream(oeis::cache_path(tmp.path.string(), "A000108")) << "0 1\ngarbage\n";
    OeisArgs corrupt;
    corrupt.id = "A000108";
    corrupt.cache_dir = tmp.path.string();
    corrupt.offline = true;
    std::ostringstream out4, err4;
    CHECK(cmd_oeis(corrupt, out4, err4) == exit_io);
}

TEST_CASE("cmd_oeis cache avoids repeat fetches") {
    TempDir tmp;
    ServeTransport transport("0 1\n1 1\n2 2\n3 5\n4 14\n");
    OeisArgs args;
    args.id = "A000108";
    args.cache_dir = tmp.path.string();
    args.transport = &transport;
    args.n_max = 4;
    std::ostringstream out1, err1;
    CHECK(cmd_oeis(args, out1, err1) == exit_ok);
    CHECK(transport.calls == 1);
    std::ostringstream out2, err2;
    CHECK(cmd_oeis(args, out2, err2) == exit_ok);
    CHECK(transport.calls == 1);  // warm cache: zero network requests
    CHECK(out2.str().find("cache") != std::string::npos);
}

TEST_CASE("binary end to end") {
    auto table = run_cli("table even-motzkin");
    CHECK(table.code == exit_ok);
    CHECK(table.out == kEvenMotzkinTable);

    auto seq = run_cli("seq --family catalan --k 1 --weight ones --n-max 9");
    CHECK(seq.code == exit_ok);
    CHECK(seq.out == "1 1 2 5 14 42 132 429 1430 4862\n");

    auto oeis = run_cli("oeis --id A006318 --family schroeder --k 1 --offline");
    CHECK(oeis.code == exit_ok);

    CHECK(run_cli("seq --family pentagon").code == exit_usage);
    CHECK(run_cli("frobnicate").code == exit_usage);
    CHECK(run_cli("oeis --id A000108 --family schroeder --offline").code == exit_mismatch);
    CHECK(run_cli("verify").code == exit_ok);  // default grid: k <= 2, n <= 5
}
