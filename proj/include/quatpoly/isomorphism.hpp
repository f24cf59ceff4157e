#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "quatpoly/freepoly.hpp"
#include "quatpoly/genpoly.hpp"

namespace quatpoly {

/// The ring isomorphism h : D_G[z] -> D<x1..x4> fixing D and sending
/// z to x1 + i x2 + j x3 + ij x4.
FreePoly h_map(const GenPoly& p);

/// Outcome of the annihilation search for a generator preimage.
struct PreimageSearch {
    GenPoly preimage;
    /// Conjugation steps on the successful path.
    std::size_t steps = 0;
    /// States where neither rule applied and the search had to backtrack.
    std::size_t degenerate_states = 0;
};

/// Runs the conjugation-annihilation search for h^-1(x_k), k in 1..4.
///
/// Starting from z, each step replaces p by a p a^-1 - p (a a coefficient
/// of h(p) not commuting with the x_k coefficient c), or, when c commutes
/// with all of them, by b a p b^-1 a^-1 - p for a target coefficient b and
/// some a not commuting with c b^-1. Each step removes at least one term of
/// h(p) while keeping x_k. Choices are tried depth-first in a fixed order.
/// Throws AlgorithmFailure if every branch dead-ends.
PreimageSearch find_preimage(const AlgebraPtr& alg, std::uint8_t k);

/// h^-1(x_k), computed once per algebra and cached. Thread-safe.
const GenPoly& preimage_generator(const AlgebraPtr& alg, std::uint8_t k);

/// h^-1 via e_b c x_{w1}..x_{wn} -> c e_b q_{w1} ... q_{wn}.
GenPoly h_inv(const FreePoly& q);

}  // namespace quatpoly
