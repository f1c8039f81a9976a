#include "frankl/oracle.hpp"

#include <algorithm>
#include <string>

#include "frankl/error.hpp"

namespace frankl::oracle {

namespace {

void require_disjoint(SetCode base, SetCode spread) {
  if (set_intersection(base, spread) != 0) {
    throw Error(ErrorKind::OverlappingBase,
                "base " + std::to_string(base) + " meets spread " + std::to_string(spread));
  }
}

bool in_cube(SetCode a, SetCode base, SetCode spread) {
  return is_subset(base, a) && is_subset(a, set_union(base, spread));
}

}  // namespace

std::size_t cnt(ElementId a, const Family& f) {
  std::size_t n = 0;
  for (SetCode s : f) {
    if (contains(s, a)) ++n;
  }
  return n;
}

bool is_frankl(const Family& f) {
  for (ElementId a : decode(big_union(f))) {
    if (2 * cnt(a, f) >= f.size()) return true;
  }
  return false;
}

Family closure_oracle(const Family& f) {
  const std::size_t n = f.size();
  if (n > 20) throw Error(ErrorKind::TooLarge, "closure oracle limited to 20 members");
  const auto& m = f.members();
  std::vector<SetCode> unions;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << n); ++pick) {
    SetCode u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((pick >> i) & 1u) u |= m[i];
    }
    unions.push_back(u);
  }
  return Family(std::move(unions));
}

std::vector<Family> enumerate_uce(const Family& fc) {
  const SetCode x = big_union(fc);
  if (cardinality(x) > 4) {
    throw Error(ErrorKind::TooLarge, "exhaustive extension enumeration limited to 4 elements");
  }
  const std::vector<SetCode> pool = submasks(x);
  const std::size_t slots = pool.size();
  std::vector<Family> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots); ++pick) {
    std::vector<SetCode> members;
    for (std::size_t i = 0; i < slots; ++i) {
      if ((pick >> i) & 1u) members.push_back(pool[i]);
    }
    auto member = [&](SetCode a) {
      return std::find(members.begin(), members.end(), a) != members.end();
    };
    bool closed = true;
    for (std::size_t i = 0; closed && i < members.size(); ++i) {
      for (std::size_t j = i + 1; closed && j < members.size(); ++j) {
        closed = member(set_union(members[i], members[j]));
      }
      for (SetCode b : fc) {
        if (!closed) break;
        closed = member(set_union(members[i], b));
      }
    }
    if (closed) out.emplace_back(std::move(members));
  }
  return out;
}

Family hypercube(SetCode base, SetCode spread) {
  require_disjoint(base, spread);
  std::vector<SetCode> members;
  for (SetCode a : submasks(spread)) members.push_back(set_union(base, a));
  return Family(std::move(members));
}

Family project(SetCode base, SetCode spread, const Family& f) {
  require_disjoint(base, spread);
  std::vector<SetCode> members;
  for (SetCode a : f) {
    if (in_cube(a, base, spread)) members.push_back(set_difference(a, base));
  }
  return Family(std::move(members));
}

Share hyper_share(SetCode base, SetCode spread, const Family& f, const WeightFn& w, SetCode x) {
  require_disjoint(base, spread);
  Share sum = 0;
  for (SetCode a : f) {
    if (in_cube(a, base, spread)) sum += set_share(w, a, x);
  }
  return sum;
}

}  // namespace frankl::oracle
