#include "confhodge/duality.hpp"

#include "confhodge/error.hpp"

namespace confhodge {

HodgeTable lefschetz_dual(const HodgeTable& table) {
  const int big_n = table.total_dim();
  const SpaceKind kind = table.kind() == SpaceKind::Relative ? SpaceKind::Open : SpaceKind::Relative;
  HodgeTable out(kind, table.n(), table.complex_dim(), table.graph());
  for (const auto& [k, dim] : table.entries()) {
    if (k.m < 0 || k.m > 2 * big_n)
      throw ValidationError("lefschetz_dual: degree " + std::to_string(k.m) + " outside [0, " +
                            std::to_string(2 * big_n) + "]");
    out.add({2 * big_n - k.m, 2 * big_n - k.w, big_n - k.p, big_n - k.q}, dim);
  }
  return out;
}

}  // namespace confhodge
