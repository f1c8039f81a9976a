#pragma once

// Uniform nkm-families (m distinct k-subsets of {0..n-1}), the permutation
// action on them, and the orbit sieve that keeps one representative per
// equivalence class.

#include <cstddef>
#include <span>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/setcode.hpp"

namespace frankl {

using Block = std::vector<ElementId>;
using NkmList = std::vector<Block>;
// mapping[i] is the image of i.
using Permutation = std::vector<ElementId>;

/// All sorted k-element sublists of `items`, in lexicographic order when
/// `items` is sorted.
template <class T>
std::vector<std::vector<T>> combine(std::span<const T> items, std::size_t k) {
  std::vector<std::vector<T>> out;
  if (k > items.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const std::size_t n = items.size();
  while (true) {
    std::vector<T> pick;
    pick.reserve(k);
    for (std::size_t i : idx) pick.push_back(items[i]);
    out.push_back(std::move(pick));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> combine(const std::vector<T>& items, std::size_t k) {
  return combine(std::span<const T>(items), k);
}

/// combine(combine([0..n), k), m).
std::vector<NkmList> gen_families(unsigned n, unsigned k, unsigned m);

/// All n! permutations in lexicographic order, identity first.
/// Throws DomainTooLarge for n > 10.
std::vector<Permutation> all_permutations(unsigned n);

Permutation inverse(const Permutation& p);

Block perm_set(const Block& a, const Permutation& p);
NkmList perm_family(const NkmList& f, const Permutation& p);

/// One representative per orbit. Each step takes the head of the remaining
/// candidates, removes its whole orbit under `perms`, and prepends it to the
/// result; the output is therefore in reverse order of selection.
std::vector<NkmList> nef(std::vector<NkmList> candidates, std::span<const Permutation> perms);

/// Some three of the four triples have a union of at most five elements.
/// Throws ArityMismatch unless f holds exactly four 3-element blocks.
bool check_533(const NkmList& f);
/// The union of all four triples has at most six elements.
bool check_634(const NkmList& f);

Family to_family(const NkmList& f);

}  // namespace frankl
