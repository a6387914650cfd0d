#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ktb {

/// Modal term over one diamond: constants, variables, Boolean connectives, diamond, box.
///
/// Terms are immutable and share subterms, so a Term is cheap to copy and witness
/// terms built by closure() form a DAG rather than a tree.
class Term {
public:
    enum class Kind { Zero, One, Var, Not, And, Or, Dia, Box };

    static Term zero();
    static Term one();
    static Term var(std::string name);

    Kind kind() const noexcept { return node_->kind; }
    const std::string& name() const noexcept { return node_->name; }
    std::size_t arity() const noexcept { return node_->args.size(); }
    const Term& arg(std::size_t i) const { return node_->args.at(i); }
    /// Identity of the shared node, used for memoised evaluation.
    const void* id() const noexcept { return node_.get(); }

    friend Term operator!(const Term& t);
    friend Term operator&&(const Term& a, const Term& b);
    friend Term operator||(const Term& a, const Term& b);
    friend Term dia(const Term& t);
    friend Term box(const Term& t);

    /// Prefix text, e.g. `And(Dia(Var x))(Not(Var x))`.
    std::string to_text() const;
    /// JSON AST, e.g. {"op":"Not","args":[{"op":"Var","name":"x"}]}.
    std::string to_json() const;

    static Term parse(std::string_view text);
    static Term parse_json(std::string_view json);

    /// Free variables in first-occurrence order.
    std::vector<std::string> variables() const;
    /// Number of distinct shared nodes; the printed text can be exponentially longer.
    std::size_t dag_size() const;

    /// Structural equality (not semantic equivalence).
    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Term> args;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(Kind k, std::vector<Term> args, std::string name = {});

    std::shared_ptr<const Node> node_;
};

/// k-fold diamond.
Term dia_n(const Term& t, std::size_t k);
/// Natural closure: box of diamond.
Term gamma(const Term& t);

const char* kind_name(Term::Kind k);

} // namespace ktb
