// The Chebyshev-like integer sequence over Q(lambda):
//   B_0 = 0, B_1 = 1, B_{n+1} = lambda*B_n - B_{n-1},
// extended to negative indices by running the recurrence backwards.
#pragma once

#include "rosen/algebraic.hpp"

namespace rosen {

AlgebraicNumber b_value(const FieldPtr& f, long n);

}  // namespace rosen
