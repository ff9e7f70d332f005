#pragma once

#include <cmath>

namespace qosc::detail {

/// Count strict sign changes of f at panels+1 equispaced nodes on [lo, hi].
/// Values with |f| <= zero_eps are treated as a root sitting on the node and
/// skipped, so rounding noise next to a root cannot manufacture extra
/// changes.
template <typename Real, typename F>
int count_sign_changes(F&& f, Real lo, Real hi, int panels, Real zero_eps) {
  int changes = 0;
  int last_sign = 0;
  for (int i = 0; i <= panels; ++i) {
    const Real x = lo + (hi - lo) * Real(i) / Real(panels);
    const Real v = f(x);
    int sign = 0;
    if (v > zero_eps)
      sign = 1;
    else if (v < -zero_eps)
      sign = -1;
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++changes;
      last_sign = sign;
    }
  }
  return changes;
}

/// Shrink a bracket with f(lo) < 0 < f(hi) by bisection until its width
/// drops below target_width.
template <typename Real, typename F>
void bisect(F&& f, Real& lo, Real& hi, Real target_width, int max_iter = 300) {
  for (int i = 0; i < max_iter && hi - lo > target_width; ++i) {
    const Real mid = lo + (hi - lo) / Real(2);
    if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
    const Real fm = f(mid);
    if (fm == Real(0)) {
      lo = mid;
      hi = mid;
      return;
    }
    (fm < Real(0) ? lo : hi) = mid;
  }
}

}  // namespace qosc::detail
