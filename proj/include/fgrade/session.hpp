#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgrade/fmodule.hpp"

namespace fgrade {

/// Ordered name bindings of a parsed script. Exactly one ring, declared
/// before everything else; forward references are rejected at parse time.
class Session {
public:
    using Value = std::variant<Ideal, FPModule, std::vector<Polynomial>>;

    struct Binding {
        std::string name;
        Value value;
    };

    std::optional<std::string> ring_name;
    std::optional<PolyRing> ring;
    std::vector<Binding> bindings;

    const Binding* find(const std::string& name) const;
    const Ideal& ideal_of(const std::string& name) const;
    const FPModule& module_of(const std::string& name) const;
    const std::vector<Polynomial>& seq_of(const std::string& name) const;
};

/// One parsed command: verb, resolved argument names, inline data, options.
struct Command {
    std::string verb;
    int line = 0;
    int col = 0;
    std::vector<std::string> arg_names;
    std::optional<std::vector<Polynomial>> tuple;  // inline polynomial list
    std::optional<int> degree;                     // ext only
    std::string method = "ext";
    std::optional<uint64_t> seed;
    int retries = 64;
    bool primes_auto = true;
    std::vector<std::string> prime_names;
};

struct ParsedSession {
    Session session;
    std::vector<Command> commands;
};

ParsedSession parse_session(const std::string& text);

struct RunOptions {
    std::optional<uint64_t> default_seed;
    bool timing = true;
};

/// Exit codes: 0 ok, 1 engine error, 2 math-precondition rejection,
/// 3 cross-method disagreement. `json_text` is the full document.
struct RunResult {
    std::string json_text;
    int exit_code = 0;
};

RunResult run(const ParsedSession& parsed, const RunOptions& options);

/// Human rendering derived from the JSON document.
std::string pretty_from_json(const std::string& json_text);

}  // namespace fgrade
