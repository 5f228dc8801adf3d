#include "fgrade/session.hpp"

#include <chrono>
#include <set>

#include <json.hpp>

#include "lexer.hpp"

namespace fgrade {

using detail::Tok;
using detail::Token;
using detail::TokenStream;
using json = nlohmann::ordered_json;

namespace detail {
Polynomial parse_polynomial_expr(const PolyRing& ring, TokenStream& ts);
}

const Session::Binding* Session::find(const std::string& name) const
{
    for (const Binding& b : bindings)
        if (b.name == name)
            return &b;
    return nullptr;
}

const Ideal& Session::ideal_of(const std::string& name) const
{
    const Binding* b = find(name);
    if (!b || !std::holds_alternative<Ideal>(b->value))
        throw precondition_error("'" + name + "' is not a bound ideal");
    return std::get<Ideal>(b->value);
}

const FPModule& Session::module_of(const std::string& name) const
{
    const Binding* b = find(name);
    if (!b || !std::holds_alternative<FPModule>(b->value))
        throw precondition_error("'" + name + "' is not a bound module");
    return std::get<FPModule>(b->value);
}

const std::vector<Polynomial>& Session::seq_of(const std::string& name) const
{
    const Binding* b = find(name);
    if (!b || !std::holds_alternative<std::vector<Polynomial>>(b->value))
        throw precondition_error("'" + name + "' is not a bound sequence");
    return std::get<std::vector<Polynomial>>(b->value);
}

namespace {

const std::set<std::string> kVerbs = {"gb",  "dim",      "ann",           "depth",
                                      "fgrade", "check-frs", "max-frs",    "ext",
                                      "koszul-homology", "check-fmodule", "check-bcm"};

class SessionParser {
public:
    explicit SessionParser(TokenStream& ts) : ts_(ts) {}

    ParsedSession parse()
    {
        while (!ts_.at(Tok::end)) {
            Token head = ts_.peek();
            if (head.kind != Tok::ident)
                ts_.fail("expected a statement");
            std::string word = dashed_ident();
            if (word == "ring")
                ring_stmt();
            else if (word == "ideal")
                ideal_stmt();
            else if (word == "module")
                module_stmt();
            else if (word == "seq")
                seq_stmt();
            else if (kVerbs.count(word))
                command_stmt(word, head);
            else
                throw parse_error(head.line, head.col, "unknown statement '" + word + "'");
        }
        return ParsedSession{std::move(session_), std::move(commands_)};
    }

private:
    // identifiers joined by '-' cover the dashed verbs and order/method names
    std::string dashed_ident()
    {
        std::string s = ts_.expect(Tok::ident, "").text;
        while (ts_.at(Tok::minus) && ts_.peek(1).kind == Tok::ident) {
            ts_.next();
            s += "-" + ts_.next().text;
        }
        return s;
    }

    const PolyRing& ring()
    {
        if (!session_.ring)
            ts_.fail("a ring must be declared before this statement");
        return *session_.ring;
    }

    void bind(const Token& where, std::string name, Session::Value value)
    {
        if (session_.ring_name == name || session_.find(name))
            throw parse_error(where.line, where.col, "name '" + name + "' is already bound");
        session_.bindings.push_back(Session::Binding{std::move(name), std::move(value)});
    }

    void ring_stmt()
    {
        Token name = ts_.expect(Tok::ident, "as ring name");
        if (session_.ring)
            throw parse_error(name.line, name.col, "exactly one ring per session");
        if (!session_.bindings.empty() || !commands_.empty())
            throw parse_error(name.line, name.col, "the ring must be the first statement");
        ts_.expect(Tok::equals, "after ring name");
        Token fieldTok = ts_.expect(Tok::ident, "as coefficient field");
        Field field = Field::rationals();
        if (fieldTok.text == "QQ") {
        } else if (fieldTok.text == "Fp") {
            ts_.expect(Tok::lparen, "after Fp");
            Token p = ts_.expect(Tok::integer, "as characteristic");
            ts_.expect(Tok::rparen, "after characteristic");
            try {
                field = Field::prime(std::stoull(p.text));
            } catch (const precondition_error& e) {
                throw parse_error(p.line, p.col, e.what());
            }
        } else {
            throw parse_error(fieldTok.line, fieldTok.col,
                              "unknown field '" + fieldTok.text + "' (use QQ or Fp(p))");
        }
        ts_.expect(Tok::lbracket, "to open the variable list");
        std::vector<std::string> vars;
        vars.push_back(ts_.expect(Tok::ident, "as variable name").text);
        while (ts_.accept(Tok::comma))
            vars.push_back(ts_.expect(Tok::ident, "as variable name").text);
        ts_.expect(Tok::rbracket, "to close the variable list");
        OrderKind kind = OrderKind::grevlex;
        if (ts_.at(Tok::ident) && ts_.peek().text == "order") {
            ts_.next();
            ts_.expect(Tok::equals, "after order");
            Token o = ts_.peek();
            try {
                kind = order_kind_from_string(dashed_ident());
            } catch (const precondition_error& e) {
                throw parse_error(o.line, o.col, e.what());
            }
        }
        ts_.expect(Tok::semicolon, "to end the statement");
        try {
            session_.ring = PolyRing(vars, field, kind);
        } catch (const precondition_error& e) {
            throw parse_error(name.line, name.col, e.what());
        }
        session_.ring_name = name.text;
    }

    std::vector<Polynomial> poly_tuple()
    {
        ts_.expect(Tok::lparen, "to open the list");
        std::vector<Polynomial> out;
        if (!ts_.at(Tok::rparen)) {
            out.push_back(detail::parse_polynomial_expr(ring(), ts_));
            while (ts_.accept(Tok::comma))
                out.push_back(detail::parse_polynomial_expr(ring(), ts_));
        }
        ts_.expect(Tok::rparen, "to close the list");
        return out;
    }

    void ideal_stmt()
    {
        Token name = ts_.expect(Tok::ident, "as ideal name");
        ts_.expect(Tok::equals, "after ideal name");
        std::vector<Polynomial> gens = poly_tuple();
        ts_.expect(Tok::semicolon, "to end the statement");
        bind(name, name.text, Ideal(ring(), std::move(gens)));
    }

    void seq_stmt()
    {
        Token name = ts_.expect(Tok::ident, "as sequence name");
        ts_.expect(Tok::equals, "after sequence name");
        std::vector<Polynomial> xs = poly_tuple();
        ts_.expect(Tok::semicolon, "to end the statement");
        bind(name, name.text, std::move(xs));
    }

    FPModule module_atom()
    {
        Token head = ts_.expect(Tok::ident, "as module constructor");
        if (head.text == "free") {
            ts_.expect(Tok::lparen, "after free");
            Token r = ts_.expect(Tok::integer, "as rank");
            ts_.expect(Tok::rparen, "after rank");
            return FPModule::free(ring(), static_cast<int>(std::stol(r.text)));
        }
        if (head.text == "cyclic") {
            std::vector<Polynomial> gens = poly_tuple();
            return FPModule::cyclic(ring(), std::move(gens));
        }
        if (head.text == "coker") {
            // rows = ambient generators, columns = relations
            ts_.expect(Tok::lbracket, "to open the matrix");
            std::vector<std::vector<Polynomial>> rows;
            do {
                ts_.expect(Tok::lbracket, "to open a row");
                std::vector<Polynomial> row;
                if (!ts_.at(Tok::rbracket)) {
                    row.push_back(detail::parse_polynomial_expr(ring(), ts_));
                    while (ts_.accept(Tok::comma))
                        row.push_back(detail::parse_polynomial_expr(ring(), ts_));
                }
                ts_.expect(Tok::rbracket, "to close the row");
                rows.push_back(std::move(row));
            } while (ts_.accept(Tok::comma));
            ts_.expect(Tok::rbracket, "to close the matrix");
            size_t cols = rows.front().size();
            for (const auto& row : rows)
                if (row.size() != cols)
                    throw parse_error(head.line, head.col, "ragged coker matrix");
            std::vector<ModuleVector> relations;
            for (size_t c = 0; c < cols; ++c) {
                std::vector<Polynomial> coords;
                for (const auto& row : rows)
                    coords.push_back(row[c]);
                relations.push_back(ModuleVector(ring(), std::move(coords)));
            }
            return FPModule(ring(), static_cast<int>(rows.size()), std::move(relations));
        }
        throw parse_error(head.line, head.col, "unknown module constructor '" + head.text + "'");
    }

    void module_stmt()
    {
        Token name = ts_.expect(Tok::ident, "as module name");
        ts_.expect(Tok::equals, "after module name");
        FPModule m = module_atom();
        while (ts_.accept(Tok::plusplus))
            m = direct_sum(m, module_atom());
        ts_.expect(Tok::semicolon, "to end the statement");
        bind(name, name.text, std::move(m));
    }

    std::string ident_of_kind(const char* what)
    {
        Token t = ts_.expect(Tok::ident, what);
        return t.text;
    }

    std::string resolve(const Token& where, const std::string& name,
                        std::initializer_list<const char*> kinds)
    {
        const Session::Binding* b = session_.find(name);
        if (!b)
            throw parse_error(where.line, where.col, "unknown name '" + name + "'");
        for (const char* kind : kinds) {
            std::string k = kind;
            if (k == "ideal" && std::holds_alternative<Ideal>(b->value))
                return name;
            if (k == "module" && std::holds_alternative<FPModule>(b->value))
                return name;
            if (k == "seq" && std::holds_alternative<std::vector<Polynomial>>(b->value))
                return name;
        }
        throw parse_error(where.line, where.col, "'" + name + "' has the wrong kind here");
    }

    std::string expect_name(std::initializer_list<const char*> kinds, const char* what)
    {
        Token t = ts_.expect(Tok::ident, what);
        return resolve(t, t.text, kinds);
    }

    void command_stmt(const std::string& verb, const Token& head)
    {
        Command cmd;
        cmd.verb = verb;
        cmd.line = head.line;
        cmd.col = head.col;
        if (!session_.ring)
            throw parse_error(head.line, head.col, "commands need a ring and bindings first");

        if (verb == "gb") {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal argument"));
        } else if (verb == "dim") {
            cmd.arg_names.push_back(expect_name({"ideal", "module"}, "as argument"));
        } else if (verb == "ann") {
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "depth" ) {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal argument"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "fgrade") {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal a"));
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal b"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "check-frs") {
            if (ts_.at(Tok::lparen))
                cmd.tuple = poly_tuple();
            else
                cmd.arg_names.push_back(expect_name({"seq"}, "as sequence argument"));
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal a"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "max-frs") {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal a"));
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal b"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "ext") {
            Token r = ts_.expect(Tok::integer, "as Ext degree");
            cmd.degree = static_cast<int>(std::stol(r.text));
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal b"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "koszul-homology") {
            if (ts_.at(Tok::lparen))
                cmd.tuple = poly_tuple();
            else
                cmd.arg_names.push_back(expect_name({"ideal", "seq"}, "as generator list"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "check-fmodule") {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal a"));
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal b"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        } else if (verb == "check-bcm") {
            cmd.arg_names.push_back(expect_name({"ideal"}, "as ideal b"));
            cmd.arg_names.push_back(expect_name({"module"}, "as module argument"));
        }

        options(cmd);
        ts_.expect(Tok::semicolon, "to end the command");
        commands_.push_back(std::move(cmd));
    }

    void options(Command& cmd)
    {
        while (ts_.at(Tok::ident) && ts_.peek(1).kind == Tok::equals) {
            Token key = ts_.next();
            ts_.next();  // '='
            if (key.text == "method" && cmd.verb == "fgrade") {
                Token v = ts_.peek();
                cmd.method = dashed_ident();
                if (cmd.method != "ext" && cmd.method != "koszul" && cmd.method != "both" &&
                    cmd.method != "prime-min")
                    throw parse_error(v.line, v.col, "unknown method '" + cmd.method + "'");
            } else if (key.text == "seed" && cmd.verb == "max-frs") {
                cmd.seed = std::stoull(ts_.expect(Tok::integer, "as seed").text);
            } else if (key.text == "retries" && cmd.verb == "max-frs") {
                cmd.retries = static_cast<int>(std::stol(ts_.expect(Tok::integer, "as retries").text));
            } else if (key.text == "primes" && cmd.verb == "check-fmodule") {
                if (ts_.at(Tok::ident) && ts_.peek().text == "auto") {
                    ts_.next();
                    cmd.primes_auto = true;
                } else {
                    ts_.expect(Tok::lparen, "to open the prime list");
                    cmd.primes_auto = false;
                    cmd.prime_names.push_back(expect_name({"ideal"}, "as prime ideal"));
                    while (ts_.accept(Tok::comma))
                        cmd.prime_names.push_back(expect_name({"ideal"}, "as prime ideal"));
                    ts_.expect(Tok::rparen, "to close the prime list");
                }
            } else {
                throw parse_error(key.line, key.col,
                                  "option '" + key.text + "' is not valid for '" + cmd.verb + "'");
            }
        }
    }

    TokenStream& ts_;
    Session session_;
    std::vector<Command> commands_;
};

}  // namespace

ParsedSession parse_session(const std::string& text)
{
    TokenStream ts(detail::lex(text));
    return SessionParser(ts).parse();
}

// ---------------------------------------------------------------------------
// execution and JSON serialization

namespace {

json poly_list_json(const std::vector<Polynomial>& ps)
{
    json arr = json::array();
    for (const Polynomial& p : ps)
        arr.push_back(p.to_string());
    return arr;
}

json ideal_json(const Ideal& I)
{
    return poly_list_json(I.generators());
}

json extnat_json(const ExtNat& v)
{
    if (v.is_infinite())
        return json("infinity");
    return json(v.value());
}

json dim_json(const std::optional<int>& d, const char* empty_token)
{
    if (!d)
        return json(empty_token);
    return json(*d);
}

json fgrade_report_json(const FGradeReport& rep, bool timing)
{
    json j;
    j["method"] = method_name(rep.method);
    j["value"] = extnat_json(rep.value);
    j["witness_degree"] = rep.witness_degree ? json(*rep.witness_degree) : json(nullptr);
    j["witness_generator"] =
        rep.witness_generator ? json(rep.witness_generator->to_string()) : json(nullptr);
    if (rep.witness_prime)
        j["witness_prime"] = ideal_json(*rep.witness_prime);
    if (timing)
        j["wall_ms"] = rep.wall_ms;
    return j;
}

json certificate_json(const FRSCertificate& cert)
{
    json steps = json::array();
    for (const FRSStep& s : cert.steps) {
        json step;
        step["element"] = s.element.to_string();
        step["contained"] = s.verdict.contained;
        step["witness"] = s.verdict.witness ? json(s.verdict.witness->to_string()) : json(nullptr);
        steps.push_back(std::move(step));
    }
    json j;
    j["valid"] = cert.valid;
    j["steps"] = std::move(steps);
    j["failure_index"] = cert.failure_index ? json(*cert.failure_index) : json(nullptr);
    return j;
}

json module_info_json(const FPModule& N)
{
    json j;
    j["is_zero"] = is_zero(N);
    j["annihilator"] = ideal_json(annihilator(N));
    j["dim"] = dim_json(module_dim(N), "-infinity");
    return j;
}

json fmodule_report_json(const FModuleReport& rep)
{
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["provenance"] = rep.provenance == CandidateProvenance::monomial_derived ? "monomial-derived"
                                                                              : "user-supplied";
    json rows = json::array();
    for (const FModuleRow& row : rep.rows) {
        json r;
        r["prime"] = ideal_json(row.prime);
        r["fgrade"] = row.fgrade;
        r["dim_bound"] = row.dim_bound;
        r["equal"] = row.equal;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    json skipped = json::array();
    for (const SkippedCandidate& s : rep.skipped) {
        json r;
        r["prime"] = ideal_json(s.prime);
        r["reason"] = s.reason;
        skipped.push_back(std::move(r));
    }
    j["skipped"] = std::move(skipped);
    if (rep.necessary_equality) {
        json r;
        r["equal"] = rep.necessary_equality->equal;
        r["fgrade"] = rep.necessary_equality->fgrade;
        r["dim_m"] = rep.necessary_equality->dim_m;
        r["dim_mbm"] = rep.necessary_equality->dim_mbm;
        j["necessary_equality"] = std::move(r);
    }
    if (rep.bcm) {
        json r;
        r["holds"] = rep.bcm->holds;
        r["depth"] = rep.bcm->depth;
        r["dim_mbm"] = rep.bcm->dim_mbm;
        r["dim_m"] = rep.bcm->dim_m;
        j["bcm"] = std::move(r);
    }
    return j;
}

class Runner {
public:
    Runner(const ParsedSession& parsed, const RunOptions& opts) : parsed_(parsed), opts_(opts) {}

    RunResult run()
    {
        json doc;
        if (parsed_.session.ring) {
            json r;
            r["name"] = *parsed_.session.ring_name;
            r["field"] = parsed_.session.ring->field().to_string();
            r["vars"] = parsed_.session.ring->var_names();
            r["order"] = parsed_.session.ring->order().to_string();
            doc["ring"] = std::move(r);
        }
        json cmds = json::array();
        for (const Command& cmd : parsed_.commands)
            cmds.push_back(run_command(cmd));
        doc["commands"] = std::move(cmds);
        return RunResult{doc.dump(2) + "\n", exit_code_};
    }

private:
    void escalate(int code)
    {
        // 3 (disagreement) > 1 (engine) > 2 (precondition) > 0
        auto rank = [](int c) {
            switch (c) {
                case 3: return 3;
                case 1: return 2;
                case 2: return 1;
                default: return 0;
            }
        };
        if (rank(code) > rank(exit_code_))
            exit_code_ = code;
    }

    json run_command(const Command& cmd)
    {
        json j;
        j["verb"] = cmd.verb;
        auto t0 = std::chrono::steady_clock::now();
        try {
            dispatch(cmd, j);
        } catch (const precondition_error& e) {
            j["error"] = {{"type", "precondition"}, {"message", e.what()}};
            escalate(2);
        } catch (const search_exhausted& e) {
            j["error"] = {{"type", "search-exhausted"}, {"message", e.what()}};
            escalate(2);
        } catch (const internal_error& e) {
            j["error"] = {{"type", "engine"}, {"message", e.what()}};
            escalate(1);
        }
        if (opts_.timing)
            j["wall_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        return j;
    }

    void dispatch(const Command& cmd, json& j)
    {
        const Session& s = parsed_.session;
        if (cmd.verb == "gb") {
            const Ideal& I = s.ideal_of(cmd.arg_names[0]);
            j["inputs"] = {{"ideal", cmd.arg_names[0]}, {"generators", ideal_json(I)}};
            j["result"] = {{"basis", poly_list_json(I.groebner().elements())}};
        } else if (cmd.verb == "dim") {
            const Session::Binding* b = s.find(cmd.arg_names[0]);
            j["inputs"] = {{"target", cmd.arg_names[0]}};
            if (std::holds_alternative<Ideal>(b->value))
                j["result"] = {{"dim", dim_json(krull_dim(std::get<Ideal>(b->value)), "empty")}};
            else
                j["result"] = {{"dim", dim_json(module_dim(std::get<FPModule>(b->value)),
                                                "-infinity")}};
        } else if (cmd.verb == "ann") {
            j["inputs"] = {{"module", cmd.arg_names[0]}};
            j["result"] = {{"generators", ideal_json(annihilator(s.module_of(cmd.arg_names[0])))}};
        } else if (cmd.verb == "depth") {
            j["inputs"] = {{"ideal", cmd.arg_names[0]}, {"module", cmd.arg_names[1]}};
            j["result"] = {{"value", extnat_json(depth_grade(s.ideal_of(cmd.arg_names[0]),
                                                             s.module_of(cmd.arg_names[1])))}};
        } else if (cmd.verb == "fgrade") {
            run_fgrade(cmd, j);
        } else if (cmd.verb == "check-frs") {
            std::vector<Polynomial> xs =
                cmd.tuple ? *cmd.tuple : s.seq_of(cmd.arg_names[cmd.arg_names.size() - 3]);
            const Ideal& a = s.ideal_of(cmd.arg_names[cmd.arg_names.size() - 2]);
            const FPModule& M = s.module_of(cmd.arg_names.back());
            j["inputs"] = {{"sequence", poly_list_json(xs)},
                           {"a", cmd.arg_names[cmd.arg_names.size() - 2]},
                           {"module", cmd.arg_names.back()}};
            j["result"] = certificate_json(check_frs(xs, a, M));
        } else if (cmd.verb == "max-frs") {
            uint64_t seed = cmd.seed ? *cmd.seed : opts_.default_seed.value_or(1);
            const Ideal& a = s.ideal_of(cmd.arg_names[0]);
            const Ideal& b = s.ideal_of(cmd.arg_names[1]);
            const FPModule& M = s.module_of(cmd.arg_names[2]);
            j["inputs"] = {{"a", cmd.arg_names[0]}, {"b", cmd.arg_names[1]},
                           {"module", cmd.arg_names[2]}};
            j["seed"] = seed;
            j["retries"] = cmd.retries;
            MaxFRSResult res = max_frs(a, b, M, seed, cmd.retries);
            std::vector<Polynomial> xs;
            for (const FRSStep& st : res.certificate.steps)
                xs.push_back(st.element);
            json r = certificate_json(res.certificate);
            r["length"] = static_cast<int>(res.certificate.steps.size());
            r["sequence"] = poly_list_json(xs);
            r["fgrade_value"] = extnat_json(res.cross_check);
            j["result"] = std::move(r);
        } else if (cmd.verb == "ext") {
            const Ideal& b = s.ideal_of(cmd.arg_names[0]);
            const FPModule& M = s.module_of(cmd.arg_names[1]);
            j["inputs"] = {{"r", *cmd.degree}, {"b", cmd.arg_names[0]},
                           {"module", cmd.arg_names[1]}};
            j["result"] = module_info_json(ext_module(*cmd.degree, b, M).value);
        } else if (cmd.verb == "koszul-homology") {
            std::vector<Polynomial> ys;
            if (cmd.tuple) {
                ys = *cmd.tuple;
            } else {
                const Session::Binding* b = s.find(cmd.arg_names[cmd.arg_names.size() - 2]);
                if (std::holds_alternative<Ideal>(b->value))
                    ys = std::get<Ideal>(b->value).generators();
                else
                    ys = std::get<std::vector<Polynomial>>(b->value);
            }
            const FPModule& M = s.module_of(cmd.arg_names.back());
            j["inputs"] = {{"generators", poly_list_json(ys)}, {"module", cmd.arg_names.back()}};
            ChainComplex K = koszul_complex(ys, M);
            json rows = json::array();
            for (int i = 0; i <= static_cast<int>(ys.size()); ++i) {
                json row = module_info_json(homology_at(K, i));
                row["i"] = i;
                rows.push_back(std::move(row));
            }
            j["result"] = {{"homology", std::move(rows)}};
        } else if (cmd.verb == "check-fmodule") {
            const Ideal& a = s.ideal_of(cmd.arg_names[0]);
            const Ideal& b = s.ideal_of(cmd.arg_names[1]);
            const FPModule& M = s.module_of(cmd.arg_names[2]);
            j["inputs"] = {{"a", cmd.arg_names[0]}, {"b", cmd.arg_names[1]},
                           {"module", cmd.arg_names[2]},
                           {"primes", cmd.primes_auto ? json("auto") : json(cmd.prime_names)}};
            std::optional<std::vector<Ideal>> primes;
            if (!cmd.primes_auto) {
                primes.emplace();
                for (const std::string& name : cmd.prime_names)
                    primes->push_back(s.ideal_of(name));
            }
            j["result"] = fmodule_report_json(check_fmodule(a, b, M, primes));
        } else if (cmd.verb == "check-bcm") {
            const Ideal& b = s.ideal_of(cmd.arg_names[0]);
            const FPModule& M = s.module_of(cmd.arg_names[1]);
            j["inputs"] = {{"b", cmd.arg_names[0]}, {"module", cmd.arg_names[1]}};
            BcmResult r = check_bcm(b, M);
            j["result"] = {{"holds", r.holds},
                           {"depth", r.depth},
                           {"dim_mbm", r.dim_mbm},
                           {"dim_m", r.dim_m}};
        } else {
            throw internal_error("unhandled verb '" + cmd.verb + "'");
        }
    }

    void run_fgrade(const Command& cmd, json& j)
    {
        const Session& s = parsed_.session;
        const Ideal& a = s.ideal_of(cmd.arg_names[0]);
        const Ideal& b = s.ideal_of(cmd.arg_names[1]);
        const FPModule& M = s.module_of(cmd.arg_names[2]);
        j["inputs"] = {{"a", cmd.arg_names[0]}, {"b", cmd.arg_names[1]},
                       {"module", cmd.arg_names[2]}};
        j["method"] = cmd.method;

        std::vector<FGradeReport> reports;
        if (cmd.method == "ext" || cmd.method == "both")
            reports.push_back(fgrade_ext(a, b, M));
        if (cmd.method == "koszul" || cmd.method == "both") {
            if (b.generators().empty())
                throw precondition_error("the koszul method needs a nonzero ideal b");
            reports.push_back(fgrade_koszul(a, b.generators(), M));
        }
        if (cmd.method == "prime-min")
            reports.push_back(fgrade_prime_min(a, b, M));

        json rep_arr = json::array();
        for (const FGradeReport& r : reports)
            rep_arr.push_back(fgrade_report_json(r, opts_.timing));

        json result;
        result["value"] = extnat_json(reports.front().value);
        if (cmd.method == "both") {
            bool agree = reports[0].value == reports[1].value;
            result["methods_agree"] = agree;
            if (!agree) {
                result["reports"] = std::move(rep_arr);
                j["result"] = std::move(result);
                j["error"] = {{"type", "method-disagreement"},
                              {"message", "ext and koszul methods disagree"}};
                escalate(3);
                return;
            }
        }
        result["reports"] = std::move(rep_arr);
        j["result"] = std::move(result);
    }

    const ParsedSession& parsed_;
    const RunOptions& opts_;
    int exit_code_ = 0;
};

}  // namespace

RunResult run(const ParsedSession& parsed, const RunOptions& options)
{
    return Runner(parsed, options).run();
}

std::string pretty_from_json(const std::string& json_text)
{
    json doc = json::parse(json_text);
    std::string out;
    if (doc.contains("ring")) {
        const json& r = doc["ring"];
        out += "ring " + r["name"].get<std::string>() + " = " + r["field"].get<std::string>() + "[";
        const auto& vars = r["vars"];
        for (size_t i = 0; i < vars.size(); ++i)
            out += (i ? "," : "") + vars[i].get<std::string>();
        out += "] order=" + r["order"].get<std::string>() + "\n";
    }
    for (const json& c : doc["commands"]) {
        out += "## " + c["verb"].get<std::string>() + "\n";
        if (c.contains("error")) {
            out += "  error (" + c["error"]["type"].get<std::string>() + "): " +
                   c["error"]["message"].get<std::string>() + "\n";
            continue;
        }
        if (c.contains("result"))
            out += "  " + c["result"].dump() + "\n";
    }
    return out;
}

}  // namespace fgrade
