#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "frankl/setcode.hpp"

namespace frankl {

// A family of sets held as a distinct list of set codes. List order is kept
// for determinism only; equality compares members as sets.
class Family {
 public:
  Family() = default;
  /// Duplicates are dropped; the first occurrence keeps its position.
  explicit Family(std::vector<SetCode> members);
  Family(std::initializer_list<SetCode> members);

  /// Builds a family from explicit element lists, e.g. {{0, 1}, {1, 2}}.
  static Family of(std::initializer_list<std::initializer_list<ElementId>> sets);

  const std::vector<SetCode>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(SetCode a) const;

  /// Prepends `a` unless already present. Returns true if the family grew.
  bool add(SetCode a);

  std::vector<SetCode> sorted() const;

  friend bool operator==(const Family& lhs, const Family& rhs);

 private:
  static constexpr std::size_t kIndexThreshold = 64;

  void rebuild_index();

  std::vector<SetCode> members_;
  std::unordered_set<SetCode> index_;
};

std::ostream& operator<<(std::ostream& os, const Family& f);

Family add_set(SetCode a, Family f);
Family family_union(Family f, const Family& g);

bool is_union_closed(const Family& f);
/// Union closed, and closed under union with every member of `fc`.
bool is_union_closed_for(const Family& fc, const Family& f);

/// F + {A} + {A|B : B in F}.
Family insert_close(SetCode a, const Family& f);
/// F + {A} + {A|B : B in F} + {A|B : B in Fc}.
Family insert_close_for(const Family& fc, SetCode a, const Family& f);

/// Smallest union-closed superfamily, built by folding insert_close.
Family closure(const Family& f);

SetCode big_union(const Family& f) noexcept;

}  // namespace frankl
