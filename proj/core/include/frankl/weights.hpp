#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/setcode.hpp"

namespace frankl {

using Weight = std::uint32_t;
// Shares are 2*sw(A) - sw(X); integral so no rationals are needed.
using Share = std::int64_t;

inline constexpr Weight kMaxWeight = Weight{1} << 20;

// Positional weights: values()[i] is the weight of element i. The domain is
// {0, ..., size()-1}.
class WeightFn {
 public:
  WeightFn() = default;
  /// Throws DomainTooLarge for more than kMaxDomain entries and
  /// InvalidWeight for any value above kMaxWeight.
  explicit WeightFn(std::vector<Weight> values);
  WeightFn(std::initializer_list<Weight> values);

  const std::vector<Weight>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  SetCode domain() const noexcept { return domain_; }
  Weight operator[](ElementId e) const { return values_.at(e); }

 private:
  std::vector<Weight> values_;
  SetCode domain_ = 0;
};

std::uint64_t set_weight(const WeightFn& w, SetCode a);
std::uint64_t family_weight(const WeightFn& w, const Family& f);
Share set_share(const WeightFn& w, SetCode a, SetCode x);
Share family_share(const WeightFn& w, const Family& f, SetCode x);
bool is_weight_function_on(const WeightFn& w, SetCode a);

// Dense lookup of set_share(w, A, X) indexed directly by the code of A.
// Only entries for subsets of X are meaningful.
class ShareTable {
 public:
  ShareTable(const WeightFn& w, SetCode x);

  SetCode domain() const noexcept { return domain_; }
  /// Number of slots; every subset code of the domain is below this.
  std::size_t capacity() const noexcept { return entries_.size(); }
  Share operator[](SetCode a) const noexcept { return entries_[a]; }
  std::span<const Share> entries() const noexcept { return entries_; }

 private:
  SetCode domain_;
  std::vector<Share> entries_;
};

inline ShareTable build_share_table(const WeightFn& w, SetCode x) { return ShareTable(w, x); }

}  // namespace frankl
