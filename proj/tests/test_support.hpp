#pragma once

#include <random>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/weights.hpp"

namespace frankl::testing {

inline Family random_family(std::mt19937_64& rng, unsigned n, unsigned max_size) {
  std::uniform_int_distribution<SetCode> pick_set(0, range_code(n));
  std::uniform_int_distribution<unsigned> pick_size(0, max_size);
  std::vector<SetCode> members;
  const unsigned size = pick_size(rng);
  for (unsigned i = 0; i < size; ++i) members.push_back(pick_set(rng));
  return Family(members);
}

inline WeightFn random_weights(std::mt19937_64& rng, unsigned n, Weight max_weight) {
  std::uniform_int_distribution<Weight> pick(0, max_weight);
  std::vector<Weight> values(n);
  for (Weight& v : values) v = pick(rng);
  return WeightFn(values);
}

inline SetCode code(std::initializer_list<ElementId> elements) {
  return encode(std::vector<ElementId>(elements));
}

}  // namespace frankl::testing
