#pragma once

// Finite sets of small naturals packed into one machine word: bit k of a
// code is set iff element k belongs to the set.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace frankl {

using ElementId = std::uint32_t;
using SetCode = std::uint32_t;

/// Largest admissible domain size; elements are 0 .. kMaxDomain-1.
inline constexpr unsigned kMaxDomain = 30;

/// Throws DomainTooLarge if any element is >= kMaxDomain. Duplicates collapse.
SetCode encode(std::span<const ElementId> elements);

/// Members of `code` in ascending order.
std::vector<ElementId> decode(SetCode code);

constexpr SetCode set_union(SetCode a, SetCode b) noexcept { return a | b; }
constexpr SetCode set_difference(SetCode a, SetCode b) noexcept { return a & ~b; }
constexpr SetCode set_intersection(SetCode a, SetCode b) noexcept { return a & b; }

constexpr unsigned cardinality(SetCode a) noexcept {
  return static_cast<unsigned>(std::popcount(a));
}

constexpr bool is_subset(SetCode a, SetCode b) noexcept { return (a | b) == b; }

constexpr bool contains(SetCode a, ElementId e) noexcept {
  return e < 32 && ((a >> e) & 1u) != 0;
}

/// Code of {0, ..., n-1}. Throws DomainTooLarge for n > kMaxDomain.
SetCode range_code(unsigned n);

/// All subsets of `x` in ascending numeric order (2^|x| entries).
std::vector<SetCode> submasks(SetCode x);

/// Calls f(sub) for every subset of `x` in ascending order without allocating.
template <class F>
void for_each_submask(SetCode x, F&& f) {
  SetCode sub = 0;
  do {
    f(sub);
    sub = (sub - x) & x;
  } while (sub != 0);
}

}  // namespace frankl
