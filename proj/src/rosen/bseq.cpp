#include "rosen/bseq.hpp"

namespace rosen {

AlgebraicNumber b_value(const FieldPtr& f, long n) {
  AlgebraicNumber lam = AlgebraicNumber::lambda(f);
  AlgebraicNumber prev = AlgebraicNumber::zero(f);              // B_0
  AlgebraicNumber cur = AlgebraicNumber::from_long(f, 1);       // B_1
  if (n == 0) return prev;
  if (n > 0) {
    for (long k = 1; k < n; ++k) {
      AlgebraicNumber next = lam * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // backwards: B_{k-1} = lambda*B_k - B_{k+1}
  AlgebraicNumber hi = cur, lo = prev;  // B_1, B_0
  for (long k = 0; k > n; --k) {
    AlgebraicNumber below = lam * lo - hi;
    hi = lo;
    lo = below;
  }
  return lo;
}

}  // namespace rosen
