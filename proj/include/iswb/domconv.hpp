#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iswb/poset.hpp"
#include "iswb/states.hpp"

namespace iswb {

// System built from a pointed L-domain: tokens are the elements, a body is
// consistent with any witness dominating it, and an entry entails whatever
// sits below the body's least upper bound inside the witness ideal.
struct DomainBridge {
  FinPoset domain;
  Isw system;

  // Maximum of a state; states of this system are exactly the ideals.
  int element_of_state(Mask x) const;
  // Principal ideal of an element, always a state.
  Mask state_of_element(int a) const;
};

constexpr int kDomainTokenCap = 16;

DomainBridge isw_from_poset(const FinPoset& D);

struct RoundtripReport {
  std::vector<int> state_of;   // element index -> state index in the listing
  std::vector<Mask> states;    // canonical state listing
  bool iso = false;
  bool bc_domain = false;      // pairwise lubs in D
  bool bc_system = false;      // BC condition on the system
  bool alg_holds = false;
};

// Checks that the ideal map is an order isomorphism onto the state order,
// that the BC condition mirrors bounded completeness, and that the system
// is algebraic. IsoCheckFailed signals a defect, never expected.
RoundtripReport roundtrip_check(const FinPoset& D);

// Seeded generator: grows elements above random antichains, then rejects
// draws that fail the L-domain analysis. Plain xorshift so runs reproduce.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

FinPoset random_ldomain(Rng& rng, int max_elems);

}  // namespace iswb
