#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "betti/ideal.hpp"
#include "betti/monomial.hpp"

namespace betti::testing {

inline MonomialIdeal make_ideal(int n, std::initializer_list<std::string> gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) ms.push_back(parse_monomial(g, n));
  return MonomialIdeal(n, std::move(ms));
}

}  // namespace betti::testing
