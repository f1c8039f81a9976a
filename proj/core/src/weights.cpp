#include "frankl/weights.hpp"

#include <bit>
#include <limits>
#include <string>

#include "frankl/error.hpp"

namespace frankl {

namespace {

void require_in_domain(const WeightFn& w, SetCode a) {
  if (!is_subset(a, w.domain())) {
    throw Error(ErrorKind::OutOfDomain, "set code " + std::to_string(a) +
                                            " is not covered by a weight vector of length " +
                                            std::to_string(w.size()));
  }
}

}  // namespace

WeightFn::WeightFn(std::vector<Weight> values) : values_(std::move(values)) {
  if (values_.size() > kMaxDomain) {
    throw Error(ErrorKind::DomainTooLarge,
                "weight vector of length " + std::to_string(values_.size()));
  }
  for (Weight v : values_) {
    if (v > kMaxWeight) {
      throw Error(ErrorKind::InvalidWeight, "weight " + std::to_string(v) + " exceeds 2^20");
    }
  }
  domain_ = range_code(static_cast<unsigned>(values_.size()));
}

WeightFn::WeightFn(std::initializer_list<Weight> values)
    : WeightFn(std::vector<Weight>(values)) {}

std::uint64_t set_weight(const WeightFn& w, SetCode a) {
  require_in_domain(w, a);
  std::uint64_t sum = 0;
  for (ElementId e : decode(a)) sum += w.values()[e];
  return sum;
}

std::uint64_t family_weight(const WeightFn& w, const Family& f) {
  std::uint64_t sum = 0;
  for (SetCode a : f) sum += set_weight(w, a);
  return sum;
}

Share set_share(const WeightFn& w, SetCode a, SetCode x) {
  require_in_domain(w, x);
  if (!is_subset(a, x)) {
    throw Error(ErrorKind::OutOfDomain,
                "set " + std::to_string(a) + " is not a subset of " + std::to_string(x));
  }
  return 2 * static_cast<Share>(set_weight(w, a)) - static_cast<Share>(set_weight(w, x));
}

Share family_share(const WeightFn& w, const Family& f, SetCode x) {
  Share sum = 0;
  for (SetCode a : f) sum += set_share(w, a, x);
  return sum;
}

bool is_weight_function_on(const WeightFn& w, SetCode a) {
  require_in_domain(w, a);
  for (ElementId e : decode(a)) {
    if (w.values()[e] > 0) return true;
  }
  return false;
}

ShareTable::ShareTable(const WeightFn& w, SetCode x) : domain_(x) {
  require_in_domain(w, x);
  if (cardinality(x) > kMaxDomain) {
    throw Error(ErrorKind::DomainTooLarge, "share table domain too large");
  }
  // Worst case |family share| <= 2^30 * 2 * 30 * 2^20 < 2^56.
  static_assert(std::numeric_limits<Share>::digits > 56);
  const Share total = static_cast<Share>(set_weight(w, x));
  entries_.assign(std::size_t{1} << std::bit_width(x), 0);
  for_each_submask(x, [&](SetCode a) {
    Share sw = 0;
    for (ElementId e : decode(a)) sw += w.values()[e];
    entries_[a] = 2 * sw - total;
  });
}

}  // namespace frankl
