#include "logsark/error.hpp"
#include "logsark/problem.hpp"
#include "logsark/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace logsark;

namespace {

int fail(const Error& e)
{
    std::cerr << "error: " << e.what() << "\n";
    return exit_status(e.kind());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Factor birational maps of surface compactifications into elementary links"};
    std::string input;
    std::string fixture;
    std::string command = "factorize";
    std::string dot_out;
    bool quiet = false;
    auto* input_opt = app.add_option("--input", input, "problem file (JSON)");
    auto* fixture_opt = app.add_option("--fixture", fixture,
                                       "builtin problem: quadric, reversion-sigma, reversion-h2, "
                                       "reversion-sigma-inverse, reversion-h0, jung-d=N");
    input_opt->excludes(fixture_opt);
    app.add_option("--command", command, "validate, ledger, factorize, hj, dot or concat");
    app.add_option("--dot-out", dot_out, "write the graph of the dot command to this file");
    app.add_flag("--quiet", quiet, "print nothing on success");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_status(ErrorKind::ParseError);
    }

    try {
        const auto known = command_names();
        if (std::find(known.begin(), known.end(), command) == known.end()) {
            throw Error(ErrorKind::UnknownCommand, "unknown command '" + command + "'");
        }
        if (input.empty() && fixture.empty()) {
            throw Error(ErrorKind::SchemaError, "give --input FILE or --fixture NAME");
        }
        const Problem problem = input.empty() ? builtin_fixture(fixture) : load_problem_file(input);
        const auto result = run_command(command, problem);
        if (!dot_out.empty()) {
            if (command != "dot") {
                throw Error(ErrorKind::SchemaError, "--dot-out only applies to the dot command");
            }
            std::ofstream out(dot_out, std::ios::binary);
            if (!out || !(out << result.dot)) {
                throw Error(ErrorKind::ParseError, "cannot write '" + dot_out + "'");
            }
        } else if (!quiet) {
            std::cout << result.text;
        }
        if (!quiet && !dot_out.empty()) {
            std::cout << "wrote " << dot_out << "\n";
        }
        return result.exit_code;
    } catch (const Error& e) {
        return fail(e);
    } catch (const nlohmann::json::exception& e) {
        return fail(Error(ErrorKind::SchemaError, e.what()));
    } catch (const std::exception& e) {
        return fail(Error(ErrorKind::InternalInvariant, e.what()));
    }
}
