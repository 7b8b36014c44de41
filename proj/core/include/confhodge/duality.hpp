#pragma once

#include "confhodge/hodge_table.hpp"

namespace confhodge {

// Poincaré–Lefschetz duality with Tate twist, N = n·d:
// H^m(X^n, D_G) of type (w, p, q) pairs with H^{2N-m}(F_G(X)) of type
// (2N - w, N - p, N - q). Maps relative tables to open tables and back, so
// applying it twice is the identity. Throws ValidationError for entries with
// m outside [0, 2N].
HodgeTable lefschetz_dual(const HodgeTable& table);

}  // namespace confhodge
