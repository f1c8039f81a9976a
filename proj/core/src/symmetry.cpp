#include "frankl/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "frankl/error.hpp"

namespace frankl {

namespace {

// Packed form of an nkm-list: sorted member codes. Bijective with the
// sorted-list form, and cheap to hash.
using OrbitKey = std::vector<SetCode>;

struct OrbitKeyHash {
  std::size_t operator()(const OrbitKey& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (SetCode c : key) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

OrbitKey key_of(const NkmList& f) {
  OrbitKey key;
  key.reserve(f.size());
  for (const Block& b : f) key.push_back(encode(b));
  std::sort(key.begin(), key.end());
  return key;
}

SetCode permute_code(SetCode a, const Permutation& p) {
  SetCode out = 0;
  for (ElementId e : decode(a)) out |= SetCode{1} << p[e];
  return out;
}

void require_four_triples(const NkmList& f) {
  const bool ok = f.size() == 4 &&
                  std::all_of(f.begin(), f.end(), [](const Block& b) { return b.size() == 3; });
  if (!ok) throw Error(ErrorKind::ArityMismatch, "expected four 3-element sets");
}

}  // namespace

std::vector<NkmList> gen_families(unsigned n, unsigned k, unsigned m) {
  Block ground(n);
  std::iota(ground.begin(), ground.end(), ElementId{0});
  return combine(combine(ground, k), m);
}

std::vector<Permutation> all_permutations(unsigned n) {
  if (n > 10) {
    throw Error(ErrorKind::DomainTooLarge, std::to_string(n) + "! permutations requested");
  }
  Permutation p(n);
  std::iota(p.begin(), p.end(), ElementId{0});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<ElementId>(i);
  return inv;
}

Block perm_set(const Block& a, const Permutation& p) {
  Block out;
  out.reserve(a.size());
  for (ElementId e : a) out.push_back(p.at(e));
  std::sort(out.begin(), out.end());
  return out;
}

NkmList perm_family(const NkmList& f, const Permutation& p) {
  NkmList out;
  out.reserve(f.size());
  for (const Block& b : f) out.push_back(perm_set(b, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NkmList> nef(std::vector<NkmList> candidates, std::span<const Permutation> perms) {
  std::vector<OrbitKey> keys;
  keys.reserve(candidates.size());
  for (const NkmList& f : candidates) keys.push_back(key_of(f));

  std::vector<std::size_t> remaining(candidates.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  std::vector<NkmList> reps;
  std::unordered_set<OrbitKey, OrbitKeyHash> orbit;
  while (!remaining.empty()) {
    const std::size_t head = remaining.front();
    const OrbitKey& rep = keys[head];
    orbit.clear();
    for (const Permutation& p : perms) {
      OrbitKey image;
      image.reserve(rep.size());
      for (SetCode c : rep) image.push_back(permute_code(c, p));
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
    std::erase_if(remaining, [&](std::size_t i) { return orbit.contains(keys[i]); });
    // The head is always removed when perms contains the identity; drop it
    // regardless so the sieve terminates for any permutation list.
    std::erase(remaining, head);
    reps.insert(reps.begin(), std::move(candidates[head]));
  }
  return reps;
}

bool check_533(const NkmList& f) {
  require_four_triples(f);
  for (std::size_t skip = 0; skip < 4; ++skip) {
    SetCode u = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) u |= encode(f[i]);
    }
    if (cardinality(u) <= 5) return true;
  }
  return false;
}

bool check_634(const NkmList& f) {
  require_four_triples(f);
  SetCode u = 0;
  for (const Block& b : f) u |= encode(b);
  return cardinality(u) <= 6;
}

Family to_family(const NkmList& f) {
  std::vector<SetCode> codes;
  codes.reserve(f.size());
  for (const Block& b : f) codes.push_back(encode(b));
  return Family(std::move(codes));
}

}  // namespace frankl
