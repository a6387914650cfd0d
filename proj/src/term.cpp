#include "ktb/term.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "ktb/errors.hpp"

namespace ktb {

Term Term::make(Kind k, std::vector<Term> args, std::string name)
{
    return Term(std::make_shared<const Node>(Node{k, std::move(name), std::move(args)}));
}

Term Term::zero() { return make(Kind::Zero, {}); }
Term Term::one() { return make(Kind::One, {}); }

Term Term::var(std::string name)
{
    if (name.empty())
        throw Error(Errc::invalid_argument, "variable name must be non-empty");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw Error(Errc::invalid_argument, "illegal character in variable name '" + name + "'");
    return make(Kind::Var, {}, std::move(name));
}

Term operator!(const Term& t) { return Term::make(Term::Kind::Not, {t}); }
Term operator&&(const Term& a, const Term& b) { return Term::make(Term::Kind::And, {a, b}); }
Term operator||(const Term& a, const Term& b) { return Term::make(Term::Kind::Or, {a, b}); }
Term dia(const Term& t) { return Term::make(Term::Kind::Dia, {t}); }
Term box(const Term& t) { return Term::make(Term::Kind::Box, {t}); }

Term dia_n(const Term& t, std::size_t k)
{
    Term r = t;
    for (std::size_t i = 0; i < k; ++i)
        r = dia(r);
    return r;
}

Term gamma(const Term& t) { return box(dia(t)); }

const char* kind_name(Term::Kind k)
{
    switch (k) {
    case Term::Kind::Zero: return "Zero";
    case Term::Kind::One: return "One";
    case Term::Kind::Var: return "Var";
    case Term::Kind::Not: return "Not";
    case Term::Kind::And: return "And";
    case Term::Kind::Or: return "Or";
    case Term::Kind::Dia: return "Dia";
    case Term::Kind::Box: return "Box";
    }
    return "?";
}

namespace {

void write_text(const Term& t, std::string& out)
{
    out += kind_name(t.kind());
    if (t.kind() == Term::Kind::Var) {
        out += ' ';
        out += t.name();
        return;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        out += '(';
        write_text(t.arg(i), out);
        out += ')';
    }
}

nlohmann::json to_json_value(const Term& t)
{
    nlohmann::json j;
    j["op"] = kind_name(t.kind());
    if (t.kind() == Term::Kind::Var)
        j["name"] = t.name();
    if (t.arity() > 0) {
        j["args"] = nlohmann::json::array();
        for (std::size_t i = 0; i < t.arity(); ++i)
            j["args"].push_back(to_json_value(t.arg(i)));
    }
    return j;
}

std::size_t arity_of(std::string_view op)
{
    if (op == "Zero" || op == "One" || op == "Var")
        return 0;
    if (op == "Not" || op == "Dia" || op == "Box")
        return 1;
    if (op == "And" || op == "Or")
        return 2;
    throw Error(Errc::parse_error, "unknown term constructor '" + std::string(op) + "'");
}

Term build(std::string_view op, std::vector<Term> args)
{
    if (op == "Zero") return Term::zero();
    if (op == "One") return Term::one();
    if (op == "Not") return !args[0];
    if (op == "Dia") return dia(args[0]);
    if (op == "Box") return box(args[0]);
    if (op == "And") return args[0] && args[1];
    return args[0] || args[1];
}

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    Term parse_all()
    {
        Term t = parse_term();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return t;
    }

private:
    Term parse_term()
    {
        skip_ws();
        auto op = ident();
        if (op.empty())
            fail("expected a constructor");
        if (op == "Var") {
            skip_ws();
            auto name = ident();
            if (name.empty())
                fail("expected a variable name");
            return Term::var(std::string(name));
        }
        std::size_t n = arity_of(op);
        std::vector<Term> args;
        for (std::size_t i = 0; i < n; ++i) {
            skip_ws();
            expect('(');
            args.push_back(parse_term());
            skip_ws();
            expect(')');
        }
        return build(op, std::move(args));
    }

    std::string_view ident()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(Errc::parse_error, "term parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Term from_json_value(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
        throw Error(Errc::parse_error, "term JSON node must be an object with a string 'op'");
    auto op = j["op"].get<std::string>();
    if (op == "Var") {
        if (!j.contains("name") || !j["name"].is_string())
            throw Error(Errc::parse_error, "Var node needs a string 'name'");
        return Term::var(j["name"].get<std::string>());
    }
    std::size_t n = arity_of(op);
    std::vector<Term> args;
    if (n > 0) {
        if (!j.contains("args") || !j["args"].is_array() || j["args"].size() != n)
            throw Error(Errc::parse_error, op + " node needs " + std::to_string(n) + " args");
        for (const auto& a : j["args"])
            args.push_back(from_json_value(a));
    }
    return build(op, std::move(args));
}

} // namespace

std::string Term::to_text() const
{
    std::string out;
    write_text(*this, out);
    return out;
}

std::string Term::to_json() const { return to_json_value(*this).dump(); }

Term Term::parse(std::string_view text) { return TextParser(text).parse_all(); }

Term Term::parse_json(std::string_view json)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, std::string("term JSON: ") + e.what());
    }
    return from_json_value(j);
}

std::vector<std::string> Term::variables() const
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::set<const void*> visited;
    std::function<void(const Term&)> walk = [&](const Term& t) {
        if (!visited.insert(t.id()).second)
            return;
        if (t.kind() == Kind::Var && seen.insert(t.name()).second)
            out.push_back(t.name());
        for (std::size_t i = 0; i < t.arity(); ++i)
            walk(t.arg(i));
    };
    walk(*this);
    return out;
}

std::size_t Term::dag_size() const
{
    std::set<const void*> visited;
    std::function<void(const Term&)> walk = [&](const Term& t) {
        if (!visited.insert(t.id()).second)
            return;
        for (std::size_t i = 0; i < t.arity(); ++i)
            walk(t.arg(i));
    };
    walk(*this);
    return visited.size();
}

bool operator==(const Term& a, const Term& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity())
        return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!(a.arg(i) == b.arg(i)))
            return false;
    return true;
}

} // namespace ktb
