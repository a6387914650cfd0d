#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ktb/frame.hpp"

namespace ktb {

/// Largest frame accepted by the canonical-labeling routines.
inline constexpr std::size_t kCanonicalTier = 16;

struct CanonicalLabeling {
    /// order[i] is the vertex placed at canonical position i.
    std::vector<std::size_t> order;
    /// graph6 text of the frame relabeled by `order`; equal iff isomorphic.
    std::string form;
    /// Automorphisms discovered during the search (each as an image vector).
    std::vector<std::vector<std::size_t>> automorphisms;
};

/// Individualization-refinement search with orbit pruning. `colors`, when non-empty,
/// is a vertex colouring that isomorphisms must preserve (lower colours come first).
CanonicalLabeling canonical_labeling(const Frame& f, const std::vector<int>& colors = {});

std::string canonical_form(const Frame& f);
bool are_isomorphic(const Frame& a, const Frame& b);

/// True iff some automorphism of f maps u to v.
bool same_orbit(const Frame& f, std::size_t u, std::size_t v);

} // namespace ktb
