#include "iswb/appmap.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

namespace {

void require_valid(const Isw& S, const char* side) {
  ValidationReport v = validate_isw(S);
  if (!v.valid()) fail(Err::InvalidSystem, std::string(side) + " system fails validation");
}

bool related_pair(const ApproxMap& H, int k, int e, Mask V) {
  return subset_of(bit(e) | V, H.rel[k]);
}

}  // namespace

ApproxMap make_map(Isw source, Isw target, std::vector<Mask> rel) {
  if (rel.size() != source.con.size()) fail(Err::MalformedMap, "rel not aligned with source con");
  Mask all = full_mask(target.size());
  for (Mask m : rel)
    if (!subset_of(m, all)) fail(Err::MalformedMap, "rel out of range");
  ApproxMap H;
  H.source = std::move(source);
  H.target = std::move(target);
  H.rel = std::move(rel);
  return H;
}

bool MapValidationReport::valid() const {
  for (const auto& a : axioms)
    if (!a.holds) return false;
  return true;
}

int MapValidationReport::held() const {
  int h = 0;
  for (const auto& a : axioms)
    if (a.holds) ++h;
  return h;
}

MapValidationReport validate_map(const ApproxMap& H) {
  require_valid(H.source, "source");
  require_valid(H.target, "target");
  const Isw& S = H.source;
  const Isw& T = H.target;
  MapValidationReport r;
  r.axioms.resize(6);
  // (1) closed under target entailment
  for (std::size_t k = 0; k < S.con.size() && r.axioms[0].holds; ++k)
    for (std::size_t l = 0; l < T.con.size(); ++l) {
      if (!related_pair(H, static_cast<int>(k), T.con[l].witness, T.con[l].body)) continue;
      Mask lost = T.ent[l] & ~H.rel[k];
      if (lost) {
        r.axioms[0] = {false, con_entry_text(S, static_cast<int>(k)) + " -> " +
                                  con_entry_text(T, static_cast<int>(l)) +
                                  " token=" + T.tokens[lowest_bit(lost)]};
        break;
      }
    }
  // (2) monotone in the body
  for (std::size_t k = 0; k < S.con.size() && r.axioms[1].holds; ++k)
    for (std::size_t l = 0; l < S.con.size(); ++l) {
      if (S.con[k].witness != S.con[l].witness) continue;
      if (!subset_of(S.con[k].body, S.con[l].body)) continue;
      Mask lost = H.rel[k] & ~H.rel[l];
      if (lost) {
        r.axioms[1] = {false, con_entry_text(S, static_cast<int>(k)) + " Y=" +
                                  token_set_text(S, S.con[l].body) +
                                  " token=" + T.tokens[lowest_bit(lost)]};
        break;
      }
    }
  // (3) closed under source entailment
  for (std::size_t k = 0; k < S.con.size() && r.axioms[2].holds; ++k)
    for (std::size_t l = 0; l < S.con.size(); ++l) {
      if (S.con[k].witness != S.con[l].witness) continue;
      if (!subset_of(S.con[l].body, S.ent[k])) continue;
      Mask lost = H.rel[l] & ~H.rel[k];
      if (lost) {
        r.axioms[2] = {false, con_entry_text(S, static_cast<int>(k)) + " X'=" +
                                  token_set_text(S, S.con[l].body) +
                                  " token=" + T.tokens[lowest_bit(lost)]};
        break;
      }
    }
  // (4) transfers along witnesses
  for (int i = 0; i < S.size() && r.axioms[3].holds; ++i)
    for (int j = 0; j < S.size() && r.axioms[3].holds; ++j) {
      if (S.find_con(j, bit(i)) < 0) continue;
      for (std::size_t k = 0; k < S.con.size(); ++k) {
        if (S.con[k].witness != i) continue;
        int l = S.find_con(j, S.con[k].body);
        Mask got = l < 0 ? 0 : H.rel[l];
        Mask lost = H.rel[k] & ~got;
        if (lost) {
          r.axioms[3] = {false, "i=" + S.tokens[i] + " j=" + S.tokens[j] +
                                    " X=" + token_set_text(S, S.con[k].body) +
                                    " token=" + T.tokens[lowest_bit(lost)]};
          break;
        }
      }
    }
  // (5) interpolation through both systems. Passing at the full image
  // covers every smaller set, and the full image itself is the first
  // failure otherwise.
  auto interpolates = [&](std::size_t k, Mask F) {
    for (std::size_t c = 0; c < S.con.size(); ++c) {
      if (!subset_of(bit(S.con[c].witness) | S.con[c].body, S.ent[k])) continue;
      for (std::size_t e = 0; e < T.con.size(); ++e)
        if (related_pair(H, static_cast<int>(c), T.con[e].witness, T.con[e].body) &&
            subset_of(F, T.ent[e]))
          return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < S.con.size() && r.axioms[4].holds; ++k) {
    if (interpolates(k, H.rel[k])) continue;
    for (Mask F : submasks_canonical(H.rel[k]))
      if (!interpolates(k, F)) {
        r.axioms[4] = {false, con_entry_text(S, static_cast<int>(k)) +
                                  " F=" + token_set_text(T, F)};
        break;
      }
  }
  // (6) bottom goes to bottom
  {
    int k = S.find_con(S.delta, 0);
    if (k < 0 || !has_bit(H.rel[k], T.delta)) r.axioms[5] = {false, "(delta,{}) misses delta'"};
  }
  // Split reading of (5): interpolate inside the source, then inside the
  // target. Equivalent given (1)-(4); both routes must agree there.
  if (r.axioms[0].holds && r.axioms[1].holds && r.axioms[2].holds && r.axioms[3].holds) {
    r.split_checked = true;
    bool split = true;
    for (std::size_t k = 0; k < S.con.size() && split; ++k) {
      Mask F = H.rel[k];
      bool src = false;
      for (std::size_t c = 0; c < S.con.size() && !src; ++c)
        if (subset_of(bit(S.con[c].witness) | S.con[c].body, S.ent[k]) &&
            subset_of(F, H.rel[c]))
          src = true;
      bool tgt = false;
      for (std::size_t e = 0; e < T.con.size() && !tgt; ++e)
        if (related_pair(H, static_cast<int>(k), T.con[e].witness, T.con[e].body) &&
            subset_of(F, T.ent[e]))
          tgt = true;
      split = src && tgt;
    }
    r.split_agrees = split == r.axioms[4].holds;
    if (!r.split_agrees)
      fail(Err::InternalCheckFailed, "interpolation axiom disagrees with its split form");
  }
  return r;
}

ApproxMap identity_map(const Isw& S) {
  ApproxMap H;
  H.source = S;
  H.target = S;
  H.rel = S.ent;
  return H;
}

ApproxMap compose(const ApproxMap& H, const ApproxMap& G) {
  if (!(H.target == G.source))
    fail(Err::SystemMismatch, "middle systems differ");
  ApproxMap C;
  C.source = H.source;
  C.target = G.target;
  C.rel.assign(H.source.con.size(), 0);
  for (std::size_t k = 0; k < H.source.con.size(); ++k)
    for (std::size_t l = 0; l < G.source.con.size(); ++l)
      if (related_pair(H, static_cast<int>(k), G.source.con[l].witness, G.source.con[l].body))
        C.rel[k] |= G.rel[l];
  return C;
}

Mask apply_map(const ApproxMap& H, Mask x) {
  StateCheck c = is_state(H.source, x);
  if (!c.ok) fail(Err::NotAState, token_set_text(H.source, x) + ": " + c.detail);
  Mask y = 0;
  for (std::size_t k = 0; k < H.source.con.size(); ++k)
    if (has_bit(x, H.source.con[k].witness) && subset_of(H.source.con[k].body, x))
      y |= H.rel[k];
  StateCheck cy = is_state(H.target, y);
  if (!cy.ok)
    fail(Err::InternalCheckFailed,
         "image " + token_set_text(H.target, y) + " is not a state: " + cy.detail);
  return y;
}

StateFn fn_from_map(const ApproxMap& H) {
  StateFn f;
  for (Mask x : enumerate_states(H.source, StateEnum::Fast))
    f.table.emplace_back(x, apply_map(H, x));
  return f;
}

ApproxMap map_from_fn(const Isw& S, const Isw& T, const StateFn& f) {
  std::vector<Mask> states = enumerate_states(S, StateEnum::Fast);
  if (f.table.size() != states.size())
    fail(Err::MalformedMap, "table does not cover the source states");
  for (std::size_t a = 0; a < states.size(); ++a)
    if (f.table[a].first != states[a])
      fail(Err::MalformedMap, "table keys are not the source states in canonical order");
  for (const auto& [x, y] : f.table) {
    StateCheck c = is_state(T, y);
    if (!c.ok) fail(Err::NotAState, token_set_text(T, y) + ": " + c.detail);
  }
  for (const auto& [x, y] : f.table)
    for (const auto& [x2, y2] : f.table)
      if (subset_of(x, x2) && !subset_of(y, y2))
        fail(Err::NotMonotone, "image of " + token_set_text(S, x) +
                                   " is not below the image of " + token_set_text(S, x2));
  auto image = [&](Mask x) {
    for (const auto& [k, v] : f.table)
      if (k == x) return v;
    fail(Err::InternalCheckFailed, "missing table entry");
  };
  std::vector<Mask> rel(S.con.size(), 0);
  for (std::size_t k = 0; k < S.con.size(); ++k) rel[k] = image(S.ent[k]);
  return make_map(S, T, std::move(rel));
}

std::vector<StateFn> enumerate_monotone_fns(const Isw& S, const Isw& T) {
  std::vector<Mask> src = enumerate_states(S, StateEnum::Fast);
  std::vector<Mask> tgt = enumerate_states(T, StateEnum::Fast);
  long long total = 1;
  for (std::size_t a = 0; a < src.size(); ++a) {
    total *= static_cast<long long>(tgt.size());
    if (total > kMonotoneFnCap)
      fail(Err::SizeLimitExceeded,
           "more than " + std::to_string(kMonotoneFnCap) + " candidate functions");
  }
  std::vector<StateFn> out;
  std::vector<std::size_t> pick(src.size(), 0);
  for (long long c = 0; c < total; ++c) {
    StateFn f;
    bool mono = true;
    for (std::size_t a = 0; a < src.size(); ++a) f.table.emplace_back(src[a], tgt[pick[a]]);
    for (std::size_t a = 0; a < src.size() && mono; ++a)
      for (std::size_t b = 0; b < src.size() && mono; ++b)
        if (subset_of(src[a], src[b]) && !subset_of(f.table[a].second, f.table[b].second))
          mono = false;
    if (mono) out.push_back(std::move(f));
    for (std::size_t d = pick.size(); d-- > 0;) {
      if (++pick[d] < tgt.size()) break;
      pick[d] = 0;
    }
  }
  return out;
}

}  // namespace iswb
