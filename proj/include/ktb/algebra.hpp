#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktb/frame.hpp"
#include "ktb/report.hpp"
#include "ktb/term.hpp"

namespace ktb {

/// Complex-algebra operations of Cm(F). Each requires X to have F's width.

/// X together with every neighbour of X.
Subset diamond(const Frame& f, const Subset& x);
/// Vertices whose closed neighbourhood lies inside X.
Subset box(const Frame& f, const Subset& x);
Subset dia_n(const Frame& f, const Subset& x, std::size_t k);
/// Natural closure box(diamond(X)).
Subset gamma(const Frame& f, const Subset& x);

using Environment = std::map<std::string, Subset>;

/// Evaluates t in Cm(F). Shared subterms are evaluated once.
Subset eval_term(const Frame& f, const Term& t, const Environment& env);

struct ClosureOptions {
    /// Maximum number of materialised elements.
    std::size_t budget = std::size_t{1} << 20;
    /// When false only the atoms are computed and elements() stays empty.
    bool materialize = true;
};

/// Finite subalgebra of Cm(F). Every element is a union of atoms, and the atoms
/// partition the vertex set. Each atom and element carries a witness term over the
/// generator variables.
class AlgebraSet {
public:
    const std::vector<Subset>& atoms() const noexcept { return atoms_; }
    const std::vector<Term>& atom_terms() const noexcept { return atom_terms_; }

    /// Materialised elements, ordered by the bitmask of atoms they contain.
    const std::vector<Subset>& elements() const noexcept { return elements_; }
    const std::vector<Term>& witnesses() const noexcept { return witnesses_; }

    /// Number of elements, 2^atoms (saturating at UINT64_MAX).
    std::uint64_t size() const noexcept;
    bool is_powerset() const noexcept { return atoms_.size() == width_; }
    bool contains(const Subset& x) const;
    /// Witness term for an element; throws when x is not in the algebra.
    Term witness(const Subset& x) const;
    /// Union of the atoms selected by `mask` (bit i selects atom i); needs atoms() <= 64.
    Subset element(std::uint64_t mask) const;

private:
    friend AlgebraSet closure(const Frame&, std::span<const Subset>, const std::vector<std::string>&,
                              ClosureOptions);
    std::size_t width_ = 0;
    std::vector<Subset> atoms_;
    std::vector<Term> atom_terms_;
    std::vector<Subset> elements_;
    std::vector<Term> witnesses_;
};

/// Least subalgebra of Cm(F) containing the generators. Generator i is named
/// names[i] in witness terms (default "x" for a single generator, else "x0", "x1", ...).
AlgebraSet closure(const Frame& f, std::span<const Subset> generators, const std::vector<std::string>& names = {},
                   ClosureOptions opts = {});

/// Least k with diamond^k(X) = W for every nonempty X; nullopt when no such k exists.
std::optional<std::size_t> simplicity_index(const Frame& f);

/// Largest frame for which check_self_conjugacy accepts exhaustive mode.
inline constexpr std::size_t kExhaustivePairTier = 13;

/// Checks x & dia(y) = 0 <=> dia(x) & y = 0 over all pairs, or over `samples` seeded pairs.
Report check_self_conjugacy(const Frame& f, CheckMode mode, std::uint64_t seed = kDefaultSeed,
                            std::uint64_t samples = 1000000);

} // namespace ktb
