#pragma once

namespace wstv::detail {

// Symmetric (half-sample) fold: -1 -> 0, -2 -> 1, n -> n-1, n+1 -> n-2.
// Folds repeatedly so it stays valid for shifts larger than the axis.
inline int mirror_index(int n, int i) {
  if (i >= 0 && i < n) return i;
  if (n == 1) return 0;
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return (i < n) ? i : period - 1 - i;
}

}  // namespace wstv::detail
