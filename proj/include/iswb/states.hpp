#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iswb/isw.hpp"
#include "iswb/poset.hpp"

namespace iswb {

// States are token masks; identity is extensional. Listings use canonical
// set order.
struct StateCheck {
  bool ok = true;
  int violated = 0;  // 1, 2 or 3 when !ok, first in that order
  std::string detail;
};

StateCheck is_state(const Isw& S, Mask x);

// Combined single-condition form: every finite subset of x sits under the
// entailment image of some entry inside x. On systems satisfying the axioms
// this is equivalent to conditions 1 and 3 together; adding entailment
// closure (condition 2) characterises states. Cross-checked in tests.
bool st_condition(const Isw& S, Mask x);

// Entailment image of one consistency entry. Always a state on valid input.
Mask principal_state(const Isw& S, int con_index);

enum class StateEnum { Fast, Oracle };

// Fast route: deduplicated principal states (every state of a finite system
// is principal). Oracle route: filters all 2^n subsets through is_state,
// capped at kValidateTokenCap tokens.
std::vector<Mask> enumerate_states(const Isw& S, StateEnum mode, Exec exec = Exec::Serial);

struct StatePoset {
  FinPoset poset;               // ordered by inclusion, named by token sets
  std::vector<Mask> states;     // aligned with poset elements
  int bottom = -1;
  std::vector<int> principal;   // con index -> state index
};

// Builds the inclusion order on all states. The result is checked to be a
// pointed L-domain with bottom the image of (delta, {}).
StatePoset state_poset(const Isw& S);

// x approximates y inside the state order: some entry of y entails x whole.
bool approx(const Isw& S, Mask x, Mask y);

// Least upper bound of two states below z, by the closure formula: union of
// entailment images of the entries lying inside z with body inside x u y.
Mask state_local_lub(const Isw& S, Mask x, Mask y, Mask z);

// Compactness of a principal state via its interpolation clause: some
// reflexive entry entailed by it entails it back.
bool principal_is_compact(const Isw& S, int con_index);

}  // namespace iswb
