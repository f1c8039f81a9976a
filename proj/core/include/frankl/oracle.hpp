#pragma once

// Brute-force ground truth. Nothing here shares code paths with the search
// beyond the set-code primitives and the share definitions.

#include <cstddef>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/weights.hpp"

namespace frankl::oracle {

/// Number of members containing element a.
std::size_t cnt(ElementId a, const Family& f);

/// Some element of the union lies in at least half of the members.
/// False for the empty family and for {{}}.
bool is_frankl(const Family& f);

/// Unions of all nonempty subfamilies. Throws TooLarge for |f| > 20.
Family closure_oracle(const Family& f);

/// Every subfamily of pow(union fc) that is union closed for fc, the empty
/// family included, in ascending order of the subfamily bitmask.
/// Throws TooLarge when the union has more than 4 elements.
std::vector<Family> enumerate_uce(const Family& fc);

struct Hypercube {
  SetCode base;
  SetCode spread;
};

/// {K | A : A subset of S}. Throws OverlappingBase if K and S intersect.
Family hypercube(SetCode base, SetCode spread);

/// {A - K : A in cube(K, S) and A in F}.
Family project(SetCode base, SetCode spread, const Family& f);

/// Sum of set shares over the members of f inside cube(K, S).
Share hyper_share(SetCode base, SetCode spread, const Family& f, const WeightFn& w, SetCode x);

}  // namespace frankl::oracle
