#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ktb/frame.hpp"
#include "ktb/term.hpp"

namespace ktb {

/// Parameters of a finite truncation: a finite set of positive even integers and the
/// truncation length p >= 2.
struct FamilySpec {
    std::set<int> members;
    int p = 2;

    /// Parses "N=2,4;p=6" (an empty set is written "N=;p=6").
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;

    /// Members that change the truncation: those <= p - 2.
    std::set<int> effective() const;
    /// One message per ineffective member.
    std::vector<std::string> warnings() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Fixed vertex order d, c1, b1, a, b2, c2, b3, l0..lp, u1..u(p-1).
namespace vertex {
inline constexpr std::size_t d = 0, c1 = 1, b1 = 2, a = 3, b2 = 4, c2 = 5, b3 = 6;
inline constexpr std::size_t ell(int i) { return 7 + static_cast<std::size_t>(i); }
inline constexpr std::size_t u(int p, int j) { return 7 + static_cast<std::size_t>(p + j); }
} // namespace vertex

inline constexpr std::size_t truncation_size(int p) { return 2 * static_cast<std::size_t>(p) + 7; }

/// A truncation together with the parameters it was built from.
struct FamilyFrame {
    FamilySpec spec;
    Frame frame;

    /// Named vertex set: A, B, B1..B3, C, C1, C2, D, P, L, U, W, Li, Uj, BDL (B u D u L),
    /// C2U (C2 u U), B2L (B2 u L), or a '+'-joined union such as "U2+U3".
    Subset named(const std::string& name) const;
};

/// Every edge of the infinite frame whose two endpoints both lie in the truncation.
/// Members above p - 2 are ignored (see FamilySpec::warnings). Odd or nonpositive
/// members are rejected.
FamilyFrame build_truncation(const FamilySpec& spec);

Subset named_subset(const FamilyFrame& f, const std::string& name);

struct ScheduleEntry {
    std::string name;
    Term term;
    /// Named set the term denotes at x = D, in FamilyFrame::named syntax.
    std::string target;
    /// Largest vertex subscript the derivation is about; the entry is only meaningful on
    /// truncations with index <= p - 4.
    int index = 0;
};

/// Terms in the variable x (bound to D) deriving singletons step by step, branching on
/// membership of i+1 in N for each odd i. Entries come in dependency order and cover
/// every L_j and U_j with j <= max_index.
std::vector<ScheduleEntry> singleton_term_schedule(const std::set<int>& n_set, int max_index);

const ScheduleEntry& schedule_entry(const std::vector<ScheduleEntry>& schedule, const std::string& name);

struct DistinguishingTerm {
    /// Least element of the symmetric difference.
    int index = 0;
    Term term;
    /// True when the first argument is the side containing `index`.
    bool first_contains_index = false;
};

/// t(x) = dia(t_Li) & ~(t_A | t_Li | t_U(i-1)), built from the schedule of the side not
/// containing i. At x = D it yields U_i on that side and U_i u U_(i+1) on the other.
DistinguishingTerm distinguishing_term(const std::set<int>& m, const std::set<int>& n);

/// Presets "g1" and "g2": the truncations N = {} at p = 2 and p = 3.
FamilyFrame preset(const std::string& name);

} // namespace ktb
