#include "frankl/family.hpp"

#include <algorithm>
#include <ostream>

namespace frankl {

Family::Family(std::vector<SetCode> members) {
  members_.reserve(members.size());
  std::unordered_set<SetCode> seen;
  for (SetCode a : members) {
    if (seen.insert(a).second) members_.push_back(a);
  }
  rebuild_index();
}

Family::Family(std::initializer_list<SetCode> members)
    : Family(std::vector<SetCode>(members)) {}

Family Family::of(std::initializer_list<std::initializer_list<ElementId>> sets) {
  std::vector<SetCode> codes;
  codes.reserve(sets.size());
  for (const auto& s : sets) {
    codes.push_back(encode(std::span<const ElementId>(s.begin(), s.size())));
  }
  return Family(std::move(codes));
}

bool Family::contains(SetCode a) const {
  if (!index_.empty()) return index_.contains(a);
  return std::find(members_.begin(), members_.end(), a) != members_.end();
}

bool Family::add(SetCode a) {
  if (contains(a)) return false;
  members_.insert(members_.begin(), a);
  if (!index_.empty()) {
    index_.insert(a);
  } else if (members_.size() > kIndexThreshold) {
    rebuild_index();
  }
  return true;
}

std::vector<SetCode> Family::sorted() const {
  std::vector<SetCode> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

void Family::rebuild_index() {
  index_.clear();
  if (members_.size() > kIndexThreshold) {
    index_.insert(members_.begin(), members_.end());
  }
}

bool operator==(const Family& lhs, const Family& rhs) {
  return lhs.size() == rhs.size() && lhs.sorted() == rhs.sorted();
}

std::ostream& operator<<(std::ostream& os, const Family& f) {
  os << '[';
  bool first_set = true;
  for (SetCode a : f) {
    if (!first_set) os << ',';
    first_set = false;
    os << '[';
    bool first = true;
    for (ElementId e : decode(a)) {
      if (!first) os << ',';
      first = false;
      os << e;
    }
    os << ']';
  }
  return os << ']';
}

Family add_set(SetCode a, Family f) {
  f.add(a);
  return f;
}

Family family_union(Family f, const Family& g) {
  for (SetCode a : g) f.add(a);
  return f;
}

bool is_union_closed(const Family& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!f.contains(set_union(m[i], m[j]))) return false;
    }
  }
  return true;
}

bool is_union_closed_for(const Family& fc, const Family& f) {
  if (!is_union_closed(f)) return false;
  for (SetCode a : f) {
    for (SetCode b : fc) {
      if (!f.contains(set_union(a, b))) return false;
    }
  }
  return true;
}

Family insert_close(SetCode a, const Family& f) {
  Family out = f;
  out.add(a);
  for (SetCode b : f) out.add(set_union(a, b));
  return out;
}

Family insert_close_for(const Family& fc, SetCode a, const Family& f) {
  Family out = insert_close(a, f);
  for (SetCode b : fc) out.add(set_union(a, b));
  return out;
}

Family closure(const Family& f) {
  Family out;
  for (SetCode a : f) out = insert_close(a, out);
  return out;
}

SetCode big_union(const Family& f) noexcept {
  SetCode u = 0;
  for (SetCode a : f) u |= a;
  return u;
}

}  // namespace frankl
