#pragma once

// Exact isomorphism for small graphs via canonical forms: individualization
// plus colour refinement, taking the lexicographically minimal adjacency
// encoding over the discrete refinements. Intended for n <= 16.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspectral/graph.hpp"

namespace qspectral {

inline constexpr int kMaxIsoVertices = 16;

struct CanonicalForm {
    std::vector<unsigned char> bytes;
    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

namespace detail {

// Row-mask entry point used by the enumeration and survey hot paths.
CanonicalForm canonical_form_rows(std::span<const std::uint32_t> rows, int n);

}  // namespace detail

}  // namespace qspectral
