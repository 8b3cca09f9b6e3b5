#include "iswb/bits.hpp"

#include <algorithm>

namespace iswb {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = lowest_bit(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= bit(i);
  return m;
}

bool mask_canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  Mask x = a, y = b;
  while (x && y) {
    int lx = lowest_bit(x), ly = lowest_bit(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

std::vector<Mask> submasks_canonical(Mask m) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << popcount(m));
  Mask s = 0;
  for (;;) {
    out.push_back(s);
    if (s == m) break;
    s = (s - m) & m;
  }
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

}  // namespace iswb
