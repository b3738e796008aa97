// pathweight: weighted lattice-path enumeration, cross-verification, and
// OEIS diffing, all in exact rational arithmetic.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "pathweight/cli.hpp"
#include "pathweight/http_transport.hpp"

namespace cli = pathweight::cli;

int main(int argc, char** argv) {
    CLI::App app{"weighted lattice-path enumeration in exact arithmetic"};
    app.require_subcommand(1);

    cli::SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "print one weighted sequence");
    seq_cmd->add_option("--family", seq.family, "catalan | schroeder | motzkin");
    seq_cmd->add_option("--k", seq.k, "family parameter k >= 1");
    seq_cmd->add_option("--weight", seq.weight,
                        "ones | linear:m | affine:m | affine2 | factorial | table:a,b,c");
    seq_cmd->add_option("--mode", seq.mode, "full | skip-first | skip-last | meta:m");
    seq_cmd->add_option("--engine", seq.engine, "auto | bruteforce | formula | feq");
    seq_cmd->add_option("--n-max", seq.n_max, "last size n to compute");
    seq_cmd->add_option("--format", seq.format, "plain | json | csv");

    cli::VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check all engines on a grid");
    verify_cmd->add_option("--families", verify.families, "comma list of families");
    verify_cmd->add_option("--k-max", verify.k_max, "check k = 1..k-max");
    verify_cmd->add_option("--n-max", verify.n_max, "check n = 0..n-max");
    verify_cmd->add_option("--weights", verify.weights, "comma list of weight specs");

    cli::TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "print a built-in table");
    table_cmd->add_option("name", table.name, "table name (even-motzkin)");

    cli::OeisArgs oeis;
    auto* oeis_cmd = app.add_subcommand("oeis", "diff a sequence against an OEIS b-file");
    oeis_cmd->add_option("--id", oeis.id, "A-number, e.g. A000108")->required();
    oeis_cmd->add_option("--family", oeis.family, "catalan | schroeder | motzkin");
    oeis_cmd->add_option("--k", oeis.k, "family parameter");
    oeis_cmd->add_option("--weight", oeis.weight, "weight spec");
    oeis_cmd->add_option("--mode", oeis.mode, "product mode");
    oeis_cmd->add_option("--offset", oeis.offset, "b-file index of computed n=0");
    oeis_cmd->add_flag("--offline", oeis.offline, "use only cache and bundled fixtures");
    oeis_cmd->add_option("--cache-dir", oeis.cache_dir, "b-file cache directory");
    oeis_cmd->add_option("--n-max", oeis.n_max, "terms to compute");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return cli::exit_usage;
    }

    if (seq_cmd->parsed()) return cli::cmd_seq(seq, std::cout, std::cerr);
    if (verify_cmd->parsed()) return cli::cmd_verify(verify, std::cout, std::cerr);
    if (table_cmd->parsed()) return cli::cmd_table(table, std::cout, std::cerr);
    if (oeis_cmd->parsed()) {
        pathweight::oeis::HttplibTransport transport;
        oeis.transport = &transport;
        if (const char* ms = std::getenv("PATHWEIGHT_HTTP_TIMEOUT_MS"))
            oeis.timeout = std::chrono::milliseconds(std::strtoll(ms, nullptr, 10));
        return cli::cmd_oeis(oeis, std::cout, std::cerr);
    }
    return cli::exit_usage;
}
