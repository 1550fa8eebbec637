#include "voxtopo/homology.hpp"

#include "voxtopo/error.hpp"

namespace voxtopo {

HomologyRanks homology_of_component(std::span<const std::int64_t> surface_genera) {
  if (surface_genera.empty()) {
    throw ContractViolation("homology_of_component: a component has at least one boundary surface");
  }
  HomologyRanks h;
  h.b0 = 1;
  for (std::int64_t g : surface_genera) {
    if (g < 0) throw ContractViolation("homology_of_component: negative genus");
    h.b1 += g;
  }
  h.b2 = std::int64_t(surface_genera.size()) - 1;
  h.b3 = 0;
  return h;
}

std::int64_t euler_characteristic_3m(const HomologyRanks& h) {
  return h.b0 - h.b1 + h.b2 - h.b3;
}

}  // namespace voxtopo
