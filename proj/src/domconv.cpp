#include "iswb/domconv.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

int DomainBridge::element_of_state(Mask x) const {
  StateCheck c = is_state(system, x);
  if (!c.ok) fail(Err::NotAState, token_set_text(system, x) + ": " + c.detail);
  // A state is directed, so its least upper bound is its maximum.
  for (Mask m = x; m; m &= m - 1) {
    int cand = lowest_bit(m);
    bool top = true;
    for (Mask o = x; o && top; o &= o - 1)
      if (!domain.le(lowest_bit(o), cand)) top = false;
    if (top) return cand;
  }
  fail(Err::InternalCheckFailed, "state without a maximum");
}

Mask DomainBridge::state_of_element(int a) const {
  if (a < 0 || a >= domain.size()) fail(Err::UnknownElem, "element index " + std::to_string(a));
  Mask x = 0;
  for (int b = 0; b < domain.size(); ++b)
    if (domain.le(b, a)) x |= bit(b);
  StateCheck c = is_state(system, x);
  if (!c.ok) fail(Err::InternalCheckFailed, "ideal is not a state: " + c.detail);
  return x;
}

DomainBridge isw_from_poset(const FinPoset& D) {
  int n = D.size();
  if (n > kDomainTokenCap)
    fail(Err::SizeLimitExceeded,
         "isw_from_poset handles at most " + std::to_string(kDomainTokenCap) + " elements");
  PosetReport rep = analyze(D);
  if (!rep.l_domain) {
    std::string why = rep.pointed ? "local lubs are missing" : "no least element";
    if (rep.l_counterexample)
      why = "no lub of " + D.names[rep.l_counterexample->x] + ", " +
            D.names[rep.l_counterexample->y] + " below " + D.names[rep.l_counterexample->z];
    fail(Err::NotLDomain, why);
  }
  std::vector<Mask> down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (D.le(b, a)) down[a] |= bit(b);
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (int i = 0; i < n; ++i)
    for (Mask X : submasks_canonical(down[i])) {
      con.push_back({i, X});
      int lub = local_lub(D, i, mask_indices(X));
      ent.push_back(down[lub]);
    }
  DomainBridge B;
  B.domain = D;
  B.system = make_isw(D.names, rep.bottom, std::move(con), std::move(ent));
  return B;
}

RoundtripReport roundtrip_check(const FinPoset& D) {
  DomainBridge B = isw_from_poset(D);
  RoundtripReport r;
  r.states = enumerate_states(B.system, StateEnum::Fast);
  int n = D.size();
  r.state_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    Mask x = B.state_of_element(a);
    auto it = std::lower_bound(r.states.begin(), r.states.end(), x, mask_canonical_less);
    if (it == r.states.end() || *it != x)
      fail(Err::IsoCheckFailed, "ideal of " + D.names[a] + " is not a listed state");
    r.state_of[a] = static_cast<int>(it - r.states.begin());
  }
  r.iso = true;
  if (static_cast<int>(r.states.size()) != n) r.iso = false;
  std::vector<char> hit(r.states.size(), 0);
  for (int a = 0; a < n && r.iso; ++a) {
    if (hit[r.state_of[a]]) r.iso = false;
    hit[r.state_of[a]] = 1;
  }
  for (int a = 0; a < n && r.iso; ++a)
    for (int b = 0; b < n && r.iso; ++b)
      if (D.le(a, b) != subset_of(r.states[r.state_of[a]], r.states[r.state_of[b]])) r.iso = false;
  if (!r.iso) fail(Err::IsoCheckFailed, "ideal map is not an order isomorphism");
  for (int a = 0; a < n; ++a) {
    Mask x = r.states[r.state_of[a]];
    if (B.element_of_state(x) != a) fail(Err::IsoCheckFailed, "maximum does not invert the ideal map");
  }
  r.bc_domain = analyze(D).bounded_complete;
  r.bc_system = check_condition(B.system, Condition::BC).holds;
  r.alg_holds = check_condition(B.system, Condition::ALG).holds;
  return r;
}

FinPoset random_ldomain(Rng& rng, int max_elems) {
  if (max_elems < 1 || max_elems > kDomainTokenCap)
    fail(Err::SizeLimitExceeded, "random_ldomain wants 1.." + std::to_string(kDomainTokenCap));
  for (int attempt = 0; attempt < 64; ++attempt) {
    int target = 1 + rng.below(max_elems);
    std::vector<std::string> names{"e0"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int v = 1; v < target; ++v) {
      std::string nv = "e" + std::to_string(v);
      // pick a nonempty support among existing elements; new element goes above it
      int picks = 1 + rng.below(2);
      for (int p = 0; p < picks; ++p)
        pairs.emplace_back(names[rng.below(static_cast<int>(names.size()))], nv);
      pairs.emplace_back("e0", nv);  // keep e0 at the bottom
      names.push_back(nv);
    }
    FinPoset P = poset_from_pairs(names, pairs);
    if (analyze(P).l_domain) return P;
  }
  fail(Err::InternalCheckFailed, "rejection sampling did not produce an L-domain");
}

}  // namespace iswb
