#pragma once

#include <cstdint>
#include <vector>

#include "iswb/bits.hpp"

namespace iswb {

// Exhaustive subset filter over 2^nbits masks. The parallel variant marks a
// flag array from an OpenMP loop and collects serially, so its output is
// identical to the serial reference for any thread count.
template <class Pred>
std::vector<Mask> filter_subsets(int nbits, Exec exec, Pred&& pred) {
  long long total = 1LL << nbits;
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long s = 0; s < total; ++s) keep[s] = pred(static_cast<Mask>(s)) ? 1 : 0;
  } else {
    for (long long s = 0; s < total; ++s) keep[s] = pred(static_cast<Mask>(s)) ? 1 : 0;
  }
  std::vector<Mask> out;
  for (long long s = 0; s < total; ++s)
    if (keep[s]) out.push_back(static_cast<Mask>(s));
  return out;
}

}  // namespace iswb
