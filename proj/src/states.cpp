#include "iswb/states.hpp"

#include <algorithm>

#include "iswb/errors.hpp"
#include "iswb/kernels.hpp"

namespace iswb {

StateCheck is_state(const Isw& S, Mask x) {
  // (1) every finite subset of x is consistent with some witness in x
  for (Mask F : submasks_canonical(x)) {
    bool ok = false;
    for (Mask w = x; w && !ok; w &= w - 1)
      if (S.find_con(lowest_bit(w), F) >= 0) ok = true;
    if (!ok) return {false, 1, "subset " + token_set_text(S, F) + " has no witness in the set"};
  }
  // (2) entailment from inside x stays inside x
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    if (!has_bit(x, S.con[k].witness) || !subset_of(S.con[k].body, x)) continue;
    Mask out = S.ent[k] & ~x;
    if (out)
      return {false, 2,
              "entry " + con_entry_text(S, static_cast<int>(k)) + " entails " +
                  S.tokens[lowest_bit(out)] + " outside the set"};
  }
  // (3) every member is entailed from inside x
  for (Mask am = x; am; am &= am - 1) {
    int a = lowest_bit(am);
    bool ok = false;
    for (std::size_t k = 0; k < S.con.size() && !ok; ++k)
      if (has_bit(x, S.con[k].witness) && subset_of(S.con[k].body, x) && has_bit(S.ent[k], a))
        ok = true;
    if (!ok) return {false, 3, "token " + S.tokens[a] + " is not entailed from inside the set"};
  }
  return {};
}

bool st_condition(const Isw& S, Mask x) {
  for (Mask F : submasks_canonical(x)) {
    bool ok = false;
    for (std::size_t k = 0; k < S.con.size() && !ok; ++k)
      if (has_bit(x, S.con[k].witness) && subset_of(S.con[k].body, x) &&
          subset_of(F, S.ent[k]))
        ok = true;
    if (!ok) return false;
  }
  return true;
}

Mask principal_state(const Isw& S, int con_index) {
  Mask x = S.ent[con_index];
  StateCheck c = is_state(S, x);
  if (!c.ok)
    fail(Err::InternalCheckFailed, "principal image of " + con_entry_text(S, con_index) +
                                       " is not a state: " + c.detail);
  return x;
}

std::vector<Mask> enumerate_states(const Isw& S, StateEnum mode, Exec exec) {
  std::vector<Mask> out;
  if (mode == StateEnum::Fast) {
    for (std::size_t k = 0; k < S.con.size(); ++k) out.push_back(principal_state(S, static_cast<int>(k)));
    std::sort(out.begin(), out.end(), mask_canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (S.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded, "state oracle handles at most " +
                                     std::to_string(kValidateTokenCap) + " tokens");
  out = filter_subsets(S.size(), exec, [&](Mask x) { return is_state(S, x).ok; });
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

StatePoset state_poset(const Isw& S) {
  StatePoset L;
  L.states = enumerate_states(S, StateEnum::Fast);
  int n = static_cast<int>(L.states.size());
  L.poset.names.reserve(n);
  for (Mask x : L.states) L.poset.names.push_back(token_set_text(S, x));
  L.poset.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) L.poset.leq[a][b] = subset_of(L.states[a], L.states[b]);
  int bot_entry = S.find_con(S.delta, 0);
  if (bot_entry < 0) fail(Err::InvalidSystem, "(delta,{}) is not a consistency entry");
  Mask bottom = S.ent[bot_entry];
  for (int a = 0; a < n; ++a)
    if (L.states[a] == bottom) L.bottom = a;
  if (L.bottom < 0) fail(Err::InternalCheckFailed, "bottom state is missing from the listing");
  L.principal.resize(S.con.size());
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    Mask p = S.ent[k];
    auto it = std::lower_bound(L.states.begin(), L.states.end(), p, mask_canonical_less);
    L.principal[k] = static_cast<int>(it - L.states.begin());
  }
  PosetReport rep = analyze(L.poset);
  if (!rep.pointed || rep.bottom != L.bottom)
    fail(Err::InternalCheckFailed, "state order is not pointed at the image of (delta,{})");
  if (!rep.l_domain) fail(Err::InternalCheckFailed, "state order is not an L-domain");
  return L;
}

bool approx(const Isw& S, Mask x, Mask y) {
  StateCheck cx = is_state(S, x), cy = is_state(S, y);
  if (!cx.ok) fail(Err::NotAState, token_set_text(S, x) + ": " + cx.detail);
  if (!cy.ok) fail(Err::NotAState, token_set_text(S, y) + ": " + cy.detail);
  for (std::size_t k = 0; k < S.con.size(); ++k)
    if (has_bit(y, S.con[k].witness) && subset_of(S.con[k].body, y) && subset_of(x, S.ent[k]))
      return true;
  return false;
}

Mask state_local_lub(const Isw& S, Mask x, Mask y, Mask z) {
  for (Mask m : {x, y, z}) {
    StateCheck c = is_state(S, m);
    if (!c.ok) fail(Err::NotAState, token_set_text(S, m) + ": " + c.detail);
  }
  if (!subset_of(x, z) || !subset_of(y, z))
    fail(Err::NotBounded, token_set_text(S, z) + " does not bound both states");
  Mask u = 0;
  for (std::size_t k = 0; k < S.con.size(); ++k)
    if (has_bit(z, S.con[k].witness) && subset_of(S.con[k].body, x | y)) u |= S.ent[k];
  return u;
}

bool principal_is_compact(const Isw& S, int con_index) {
  Mask M = S.ent[con_index];
  for (std::size_t l = 0; l < S.con.size(); ++l)
    if (entails_pair(S, con_index, S.con[l].witness, S.con[l].body) &&
        entails_pair(S, static_cast<int>(l), S.con[l].witness, S.con[l].body) &&
        subset_of(M, S.ent[l]))
      return true;
  return false;
}

}  // namespace iswb
