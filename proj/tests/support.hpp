#pragma once

#include <string>
#include <vector>

#include "iswb/domconv.hpp"
#include "iswb/isw.hpp"
#include "iswb/poset.hpp"

namespace iswb::test {

inline std::string fixture(const std::string& name) {
  return std::string(ISWB_FIXTURE_DIR) + "/" + name;
}

// Independent oracle: recursive check straight off the quantified
// definition. Enumerates directed subsets naively; tiny posets only.
inline bool naive_way_below(const FinPoset& P, int x, int y) {
  int n = P.size();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    std::vector<int> elems = mask_indices(s);
    bool directed = true;
    for (int a : elems)
      for (int b : elems) {
        bool bounded = false;
        for (int u : elems)
          if (P.le(a, u) && P.le(b, u)) bounded = true;
        if (!bounded) directed = false;
      }
    if (!directed) continue;
    int lub = -1;
    for (int c = 0; c < n; ++c) {
      bool is_ub = true;
      for (int a : elems)
        if (!P.le(a, c)) is_ub = false;
      if (!is_ub) continue;
      bool least = true;
      for (int d = 0; d < n; ++d) {
        bool d_ub = true;
        for (int a : elems)
          if (!P.le(a, d)) d_ub = false;
        if (d_ub && !P.le(c, d)) least = false;
      }
      if (least) lub = c;
    }
    if (lub < 0) continue;
    if (!P.le(y, lub)) continue;
    bool has_bound = false;
    for (int u : elems)
      if (P.le(x, u)) has_bound = true;
    if (!has_bound) return false;
  }
  return true;
}

// Fixture posets used throughout: a two-element chain, the bowtie that is
// an L-domain but not bounded-complete, a flat pair, and a capped bowtie
// that is not an L-domain.
inline FinPoset chain2() { return poset_from_pairs({"b", "t"}, {{"b", "t"}}); }

inline FinPoset bowtie() {
  return poset_from_pairs({"bot", "a", "b", "t1", "t2"},
                          {{"bot", "a"},
                           {"bot", "b"},
                           {"a", "t1"},
                           {"b", "t1"},
                           {"a", "t2"},
                           {"b", "t2"}});
}

inline FinPoset flat2() {
  return poset_from_pairs({"bot", "p", "q"}, {{"bot", "p"}, {"bot", "q"}});
}

inline FinPoset capped_bowtie() {
  return poset_from_pairs({"bot", "a", "b", "t1", "t2", "u"},
                          {{"bot", "a"},
                           {"bot", "b"},
                           {"a", "t1"},
                           {"b", "t1"},
                           {"a", "t2"},
                           {"b", "t2"},
                           {"t1", "u"},
                           {"t2", "u"}});
}

// Mixed pool of valid systems for property tests: domain images, witness
// spreads of algebraic systems and a couple of fixed shapes. Every draw is
// validated before use.
std::vector<Isw> random_valid_systems(std::uint64_t seed, int count, int max_tokens);

}  // namespace iswb::test
