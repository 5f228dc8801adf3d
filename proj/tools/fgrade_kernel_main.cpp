#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgrade/session.hpp"

namespace {

int run_file(const std::string& path, const std::string& json_out, std::optional<uint64_t> seed,
             bool no_timing, bool pretty)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    fgrade::RunOptions opts;
    opts.default_seed = seed;
    opts.timing = !no_timing;

    fgrade::RunResult result;
    try {
        fgrade::ParsedSession parsed = fgrade::parse_session(buf.str());
        result = fgrade::run(parsed, opts);
    } catch (const fgrade::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "error: cannot write '" << json_out << "'\n";
            return 1;
        }
        out << result.json_text;
    }
    if (pretty)
        std::cout << fgrade::pretty_from_json(result.json_text);
    else if (json_out.empty())
        std::cout << result.json_text;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"f-grade engine: filter grades, filter regular sequences and"
                 " (a,b)-f-module checks over polynomial rings"};
    app.require_subcommand(1);

    std::string file, json_out;
    std::optional<uint64_t> seed;
    bool no_timing = false, pretty = false;

    CLI::App* runcmd = app.add_subcommand("run", "run a session script");
    runcmd->add_option("file", file, "session script (.alg)")->required();
    runcmd->add_option("--json", json_out, "write the JSON document to a file");
    runcmd->add_option("--seed", seed, "default seed for randomized searches");
    runcmd->add_flag("--no-timing", no_timing, "omit wall times (deterministic output)");
    runcmd->add_flag("--pretty", pretty, "human rendering derived from the JSON");

    CLI11_PARSE(app, argc, argv);
    return run_file(file, json_out, seed, no_timing, pretty);
}
