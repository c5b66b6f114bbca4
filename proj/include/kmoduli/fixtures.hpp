#pragma once

#include "kmoduli/fujita.hpp"

namespace kmoduli {
namespace fixtures {

/// P^1 x P^1 with boundary c*C0, C0 of class f1 + 4 f2 and an order-4
/// tangency point: the ray over the (1,4)-weighted blow-up exceptional.
/// A(E) = 5 - 4c (discrepancy 4, ord_E(C0) = 4).
RayProblem p14_exceptional();

/// Same pair, ray along the ruling f1 (A = 1).
RayProblem p14_ruling_f1();

/// Same pair, ray along the ruling f2 (A = 1).
RayProblem p14_ruling_f2();

/// Same pair, ray along the boundary curve itself (A = 1 - c).
RayProblem p14_boundary();

/// P^1 x P^1 with boundary c*(4Q + l1 + l2) of class (4,6), ray along the
/// conic Q; A = 1 - 4c.
RayProblem p46_conic();

/// F_2 with boundary c*D0, D0 = 4 e_inf + 2 e_0 + f1 + f2 of class 6e + 10f.
/// Ray along a fiber f1; A = 1 - c.
RayProblem f2_fiber();

/// Same pair, ray along the infinity section e_inf = e + 2f; A = 1 - 4c.
RayProblem f2_infinity_section();

/// Looks a fixture up by "<pair>/<divisor>" id, e.g. "p14/E", "p14/f1",
/// "p14/f2", "p14/D", "p46/Q", "f2d0/f1", "f2d0/einf".
RayProblem by_name(const std::string& id);

std::vector<std::string> names();

}  // namespace fixtures
}  // namespace kmoduli
