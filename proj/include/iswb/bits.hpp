#pragma once

#include <cstdint>
#include <vector>

namespace iswb {

// Token and element sets are bit masks over the declared index order.
// Everything in this library is capped well below 64 indices.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

std::vector<int> mask_indices(Mask m);
Mask mask_of(const std::vector<int>& indices);

// Canonical set order: smaller sets first, ties broken lexicographically on
// the ascending index sequence. All listings and counterexamples use it.
bool mask_canonical_less(Mask a, Mask b);

// Submasks of m in canonical order. 2^popcount(m) entries.
std::vector<Mask> submasks_canonical(Mask m);

enum class Exec { Serial, Parallel };

}  // namespace iswb
