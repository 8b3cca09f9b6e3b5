#pragma once

#include <string>
#include <vector>

#include "iswb/appmap.hpp"
#include "iswb/isw.hpp"

namespace iswb {

// One-token system over delta alone; terminal in the mapping category.
Isw terminal_system();

// The unique mapping into the terminal system: everything relates to delta.
ApproxMap terminal_map(const Isw& S);

constexpr int kUniqueRelCap = 12;

// Exhausts all 2^|con| candidate relations into the terminal system and
// counts the valid ones. |con| is capped at kUniqueRelCap.
int count_terminal_maps(const Isw& S);

constexpr int kProductTokenCap = 64;
constexpr int kProductEnumCap = 16;

// Product over token pairs, named "(p,q)". A body is consistent with a pair
// witness when its two projections are; entailment is coordinatewise.
struct ProductSystem {
  Isw left, right;
  Isw product;
  ApproxMap pr1, pr2;  // projections out of the product

  int pair_index(int a1, int a2) const;
  Mask outer(Mask m1, Mask m2) const;  // pair tokens with both coordinates set
  Mask left_of(Mask m) const;          // projections of a pair-token set
  Mask right_of(Mask m) const;
};

ProductSystem product_system(const Isw& S1, const Isw& S2);

// Mediating mapping into a product: coordinatewise pairing of H1 and H2,
// which must share a source and target the two factors.
ApproxMap pairing(const ProductSystem& P, const ApproxMap& H1, const ApproxMap& H2);

}  // namespace iswb
