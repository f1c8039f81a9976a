#include "frankl/setcode.hpp"

#include <string>

#include "frankl/error.hpp"

namespace frankl {

SetCode encode(std::span<const ElementId> elements) {
  SetCode code = 0;
  for (ElementId e : elements) {
    if (e >= kMaxDomain) {
      throw Error(ErrorKind::DomainTooLarge,
                  "element " + std::to_string(e) + " exceeds the supported domain");
    }
    code |= SetCode{1} << e;
  }
  return code;
}

std::vector<ElementId> decode(SetCode code) {
  std::vector<ElementId> out;
  out.reserve(cardinality(code));
  while (code != 0) {
    out.push_back(static_cast<ElementId>(std::countr_zero(code)));
    code &= code - 1;
  }
  return out;
}

SetCode range_code(unsigned n) {
  if (n > kMaxDomain) {
    throw Error(ErrorKind::DomainTooLarge, "domain size " + std::to_string(n));
  }
  return n == 0 ? 0 : (SetCode{1} << n) - 1;
}

std::vector<SetCode> submasks(SetCode x) {
  std::vector<SetCode> out;
  out.reserve(std::size_t{1} << cardinality(x));
  for_each_submask(x, [&](SetCode s) { out.push_back(s); });
  return out;
}

}  // namespace frankl
