#include "iswb/isw.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

namespace {

bool con_entry_less(const ConEntry& a, const ConEntry& b) {
  if (a.witness != b.witness) return a.witness < b.witness;
  return mask_canonical_less(a.body, b.body);
}

}  // namespace

int Isw::token_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (tokens[i] == name) return i;
  return -1;
}

int Isw::find_con(int witness, Mask body) const {
  ConEntry probe{witness, body};
  auto it = std::lower_bound(con.begin(), con.end(), probe, con_entry_less);
  if (it == con.end() || it->witness != witness || it->body != body) return -1;
  return static_cast<int>(it - con.begin());
}

std::string token_set_text(const Isw& S, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < S.size(); ++i)
    if (has_bit(m, i)) {
      if (!first) out += ",";
      out += S.tokens[i];
      first = false;
    }
  return out + "}";
}

std::string con_entry_text(const Isw& S, int con_index) {
  const ConEntry& e = S.con[con_index];
  return "(" + S.tokens[e.witness] + "," + token_set_text(S, e.body) + ")";
}

Isw make_isw(std::vector<std::string> tokens, int delta, std::vector<ConEntry> con,
             std::vector<Mask> ent) {
  int n = static_cast<int>(tokens.size());
  if (n == 0) fail(Err::MalformedSystem, "no tokens");
  if (n > kIswTokenCap)
    fail(Err::SizeLimitExceeded, "at most " + std::to_string(kIswTokenCap) + " tokens");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (tokens[i] == tokens[j]) fail(Err::MalformedSystem, "duplicate token " + tokens[i]);
  if (delta < 0 || delta >= n) fail(Err::MalformedSystem, "delta is not a token");
  if (con.size() != ent.size()) fail(Err::MalformedSystem, "ent not aligned with con");
  Mask all = full_mask(n);
  std::vector<int> order(con.size());
  for (std::size_t k = 0; k < con.size(); ++k) {
    if (con[k].witness < 0 || con[k].witness >= n)
      fail(Err::MalformedSystem, "witness out of range");
    if (!subset_of(con[k].body, all)) fail(Err::MalformedSystem, "body out of range");
    if (!subset_of(ent[k], all)) fail(Err::MalformedSystem, "ent out of range");
    order[k] = static_cast<int>(k);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return con_entry_less(con[a], con[b]); });
  Isw S;
  S.tokens = std::move(tokens);
  S.delta = delta;
  S.con.reserve(con.size());
  S.ent.reserve(con.size());
  for (int k : order) {
    if (!S.con.empty() && S.con.back() == con[k])
      fail(Err::MalformedSystem, "duplicate consistency entry");
    S.con.push_back(con[k]);
    S.ent.push_back(ent[k]);
  }
  return S;
}

IswBuilder& IswBuilder::token(const std::string& t) {
  tokens.push_back(t);
  return *this;
}

IswBuilder& IswBuilder::con(int witness, Mask body) {
  entries.push_back({ConEntry{witness, body}, Mask{0}});
  return *this;
}

IswBuilder& IswBuilder::ent(int witness, Mask body, Mask entailed) {
  for (auto& [c, m] : entries)
    if (c.witness == witness && c.body == body) {
      m |= entailed;
      return *this;
    }
  entries.push_back({ConEntry{witness, body}, entailed});
  return *this;
}

Isw IswBuilder::build() const {
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (const auto& [c, m] : entries) {
    con.push_back(c);
    ent.push_back(m);
  }
  return make_isw(tokens, delta, std::move(con), std::move(ent));
}

bool ValidationReport::valid() const {
  for (const auto& a : axioms)
    if (!a.holds) return false;
  return true;
}

int ValidationReport::held() const {
  int h = 0;
  for (const auto& a : axioms)
    if (a.holds) ++h;
  return h;
}

bool entails(const Isw& S, int witness, Mask body, int a) {
  int k = S.find_con(witness, body);
  if (k < 0)
    fail(Err::NotConsistent, "(" + S.tokens[witness] + "," + token_set_text(S, body) +
                                 ") is not a consistency entry");
  return has_bit(S.ent[k], a);
}

bool entails_set(const Isw& S, int con_index, Mask Y) { return subset_of(Y, S.ent[con_index]); }

bool entails_pair(const Isw& S, int con_index, int e, Mask Z) {
  return subset_of(bit(e) | Z, S.ent[con_index]);
}

namespace {

std::string set_text(const Isw& S, Mask m) { return token_set_text(S, m); }

AxiomVerdict ax_token_self(const Isw& S) {
  for (int i = 0; i < S.size(); ++i)
    if (S.find_con(i, bit(i)) < 0) return {false, "i=" + S.tokens[i]};
  return {};
}

AxiomVerdict ax_downward(const Isw& S) {
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    int i = S.con[k].witness;
    for (Mask Y : submasks_canonical(S.con[k].body))
      if (S.find_con(i, Y) < 0)
        return {false,
                "i=" + S.tokens[i] + " X=" + set_text(S, S.con[k].body) + " Y=" + set_text(S, Y)};
  }
  return {};
}

AxiomVerdict ax_empty_delta(const Isw& S) {
  for (int i = 0; i < S.size(); ++i) {
    int k = S.find_con(i, 0);
    if (k < 0 || !has_bit(S.ent[k], S.delta)) return {false, "i=" + S.tokens[i]};
  }
  return {};
}

AxiomVerdict ax_ent_consistent(const Isw& S) {
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    int i = S.con[k].witness;
    for (Mask Y : submasks_canonical(S.ent[k]))
      if (S.find_con(i, Y) < 0)
        return {false,
                "i=" + S.tokens[i] + " X=" + set_text(S, S.con[k].body) + " Y=" + set_text(S, Y)};
  }
  return {};
}

AxiomVerdict ax_monotone(const Isw& S) {
  for (std::size_t k = 0; k < S.con.size(); ++k)
    for (std::size_t l = 0; l < S.con.size(); ++l) {
      if (S.con[k].witness != S.con[l].witness) continue;
      if (!subset_of(S.con[k].body, S.con[l].body)) continue;
      Mask lost = S.ent[k] & ~S.ent[l];
      if (lost)
        return {false, "i=" + S.tokens[S.con[k].witness] + " X=" + set_text(S, S.con[k].body) +
                           " Y=" + set_text(S, S.con[l].body) +
                           " token=" + S.tokens[lowest_bit(lost)]};
    }
  return {};
}

AxiomVerdict ax_cut(const Isw& S) {
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    int i = S.con[k].witness;
    for (std::size_t l = 0; l < S.con.size(); ++l) {
      if (S.con[l].witness != i) continue;
      if (!subset_of(S.con[l].body, S.ent[k])) continue;
      Mask lost = S.ent[l] & ~S.ent[k];
      if (lost)
        return {false, "i=" + S.tokens[i] + " X=" + set_text(S, S.con[k].body) +
                           " Y=" + set_text(S, S.con[l].body) +
                           " token=" + S.tokens[lowest_bit(lost)]};
    }
  }
  return {};
}

AxiomVerdict ax_witness_con(const Isw& S) {
  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j) {
      if (S.find_con(j, bit(i)) < 0) continue;
      for (std::size_t k = 0; k < S.con.size(); ++k) {
        if (S.con[k].witness != i) continue;
        if (S.find_con(j, S.con[k].body) < 0)
          return {false,
                  "i=" + S.tokens[i] + " j=" + S.tokens[j] + " X=" + set_text(S, S.con[k].body)};
      }
    }
  return {};
}

AxiomVerdict ax_witness_fwd(const Isw& S) {
  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j) {
      if (S.find_con(j, bit(i)) < 0) continue;
      for (std::size_t k = 0; k < S.con.size(); ++k) {
        if (S.con[k].witness != i) continue;
        int l = S.find_con(j, S.con[k].body);
        Mask got = l < 0 ? 0 : S.ent[l];
        Mask lost = S.ent[k] & ~got;
        if (lost)
          return {false, "i=" + S.tokens[i] + " j=" + S.tokens[j] +
                             " X=" + set_text(S, S.con[k].body) +
                             " token=" + S.tokens[lowest_bit(lost)]};
      }
    }
  return {};
}

AxiomVerdict ax_witness_back(const Isw& S) {
  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j) {
      if (S.find_con(j, bit(i)) < 0) continue;
      for (std::size_t k = 0; k < S.con.size(); ++k) {
        if (S.con[k].witness != i) continue;
        int l = S.find_con(j, S.con[k].body);
        if (l < 0) continue;
        Mask lost = S.ent[l] & ~S.ent[k];
        if (lost)
          return {false, "i=" + S.tokens[i] + " j=" + S.tokens[j] +
                             " X=" + set_text(S, S.con[k].body) +
                             " token=" + S.tokens[lowest_bit(lost)]};
      }
    }
  return {};
}

AxiomVerdict ax_interpolation(const Isw& S) {
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    Mask M = S.ent[k];
    // Passing at Y = M covers every smaller Y with the same interpolant, and
    // failing at M is itself a counterexample, so the check is exact.
    bool pass = false;
    for (std::size_t l = 0; l < S.con.size() && !pass; ++l)
      if (entails_pair(S, static_cast<int>(k), S.con[l].witness, S.con[l].body) &&
          subset_of(M, S.ent[l]))
        pass = true;
    if (pass) continue;
    for (Mask Y : submasks_canonical(M)) {
      bool ok = false;
      for (std::size_t l = 0; l < S.con.size() && !ok; ++l)
        if (entails_pair(S, static_cast<int>(k), S.con[l].witness, S.con[l].body) &&
            subset_of(Y, S.ent[l]))
          ok = true;
      if (!ok)
        return {false, "i=" + S.tokens[S.con[k].witness] + " X=" + set_text(S, S.con[k].body) +
                           " Y=" + set_text(S, Y)};
    }
  }
  return {};
}

}  // namespace

ValidationReport validate_isw(const Isw& S) {
  if (S.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "validate_isw handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  if (S.con.size() > kValidateConCap)
    fail(Err::SizeLimitExceeded, "validate_isw handles at most " +
                                     std::to_string(kValidateConCap) + " consistency entries");
  ValidationReport r;
  r.axioms.resize(10);
  r.axioms[0] = ax_token_self(S);
  r.axioms[1] = ax_downward(S);
  r.axioms[2] = ax_empty_delta(S);
  r.axioms[3] = ax_ent_consistent(S);
  r.axioms[4] = ax_monotone(S);
  r.axioms[5] = ax_cut(S);
  r.axioms[6] = ax_witness_con(S);
  r.axioms[7] = ax_witness_fwd(S);
  r.axioms[8] = ax_witness_back(S);
  r.axioms[9] = ax_interpolation(S);
  return r;
}

std::vector<int> reflexive_pairs(const Isw& S) {
  std::vector<int> out;
  for (std::size_t k = 0; k < S.con.size(); ++k)
    if (entails_pair(S, static_cast<int>(k), S.con[k].witness, S.con[k].body))
      out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> reflexive_tokens(const Isw& S) {
  std::vector<int> out;
  for (int j = 0; j < S.size(); ++j) {
    int k = S.find_con(j, bit(j));
    if (k >= 0 && has_bit(S.ent[k], j)) out.push_back(j);
  }
  return out;
}

ConditionReport check_condition(const Isw& S, Condition which) {
  ValidationReport v = validate_isw(S);
  if (!v.valid()) {
    for (std::size_t a = 0; a < v.axioms.size(); ++a)
      if (!v.axioms[a].holds)
        fail(Err::InvalidSystem,
             "axiom " + std::to_string(a + 1) + " fails at " + v.axioms[a].counterexample);
  }
  ConditionReport r;
  r.which = which;
  switch (which) {
    case Condition::BC: {
      std::vector<Mask> bodies;
      for (const auto& c : S.con) bodies.push_back(c.body);
      std::sort(bodies.begin(), bodies.end(), mask_canonical_less);
      bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());
      for (Mask X : bodies) {
        for (int i = 0; i < S.size() && r.holds; ++i) {
          int k = S.find_con(i, X);
          if (k < 0) continue;
          for (int j = i + 1; j < S.size(); ++j) {
            int l = S.find_con(j, X);
            if (l < 0) continue;
            Mask diff = S.ent[k] ^ S.ent[l];
            if (diff) {
              r.holds = false;
              r.counterexample = "i=" + S.tokens[i] + " j=" + S.tokens[j] +
                                 " X=" + token_set_text(S, X) +
                                 " token=" + S.tokens[lowest_bit(diff)];
              break;
            }
          }
        }
        if (!r.holds) break;
      }
      break;
    }
    case Condition::ALG: {
      r.con_refl = reflexive_pairs(S);
      for (std::size_t k = 0; k < S.con.size() && r.holds; ++k) {
        Mask M = S.ent[k];
        bool pass = false;
        for (int l : r.con_refl)
          if (entails_pair(S, static_cast<int>(k), S.con[l].witness, S.con[l].body) &&
              subset_of(M, S.ent[l])) {
            pass = true;
            break;
          }
        if (pass) continue;
        for (Mask F : submasks_canonical(M)) {
          bool ok = false;
          for (int l : r.con_refl)
            if (entails_pair(S, static_cast<int>(k), S.con[l].witness, S.con[l].body) &&
                subset_of(F, S.ent[l])) {
              ok = true;
              break;
            }
          if (!ok) {
            r.holds = false;
            r.counterexample = "i=" + S.tokens[S.con[k].witness] +
                               " X=" + token_set_text(S, S.con[k].body) +
                               " F=" + token_set_text(S, F);
            break;
          }
        }
      }
      break;
    }
    case Condition::SALG: {
      for (std::size_t k = 0; k < S.con.size() && r.holds; ++k) {
        int i = S.con[k].witness;
        Mask M = S.ent[k];
        for (Mask am = M; am; am &= am - 1) {
          int a = lowest_bit(am);
          bool ok = false;
          for (std::size_t l = 0; l < S.con.size() && !ok; ++l) {
            if (S.con[l].witness != i) continue;
            Mask Z = S.con[l].body;
            if (subset_of(Z, M) && subset_of(Z, S.ent[l]) && has_bit(S.ent[l], a)) ok = true;
          }
          if (!ok) {
            r.holds = false;
            r.counterexample = "i=" + S.tokens[i] + " X=" + token_set_text(S, S.con[k].body) +
                               " token=" + S.tokens[a];
            break;
          }
        }
      }
      break;
    }
    case Condition::ALGP: {
      std::vector<int> rt = reflexive_tokens(S);
      for (std::size_t k = 0; k < S.con.size() && r.holds; ++k) {
        Mask M = S.ent[k];
        bool pass = false;
        for (int j : rt)
          if (has_bit(M, j) && subset_of(M, S.ent[S.find_con(j, bit(j))])) {
            pass = true;
            break;
          }
        if (pass) continue;
        for (Mask F : submasks_canonical(M)) {
          bool ok = false;
          for (int j : rt)
            if (has_bit(M, j) && subset_of(F, S.ent[S.find_con(j, bit(j))])) {
              ok = true;
              break;
            }
          if (!ok) {
            r.holds = false;
            r.counterexample = "i=" + S.tokens[S.con[k].witness] +
                               " X=" + token_set_text(S, S.con[k].body) +
                               " F=" + token_set_text(S, F);
            break;
          }
        }
      }
      break;
    }
  }
  return r;
}

Isw entailment_closure(const Isw& S, const std::vector<std::pair<ConEntry, Mask>>& seed) {
  Isw R = S;
  std::fill(R.ent.begin(), R.ent.end(), Mask{0});
  for (const auto& [c, m] : seed) {
    int k = R.find_con(c.witness, c.body);
    if (k < 0)
      fail(Err::NotConsistent, "seed entry (" + S.tokens[c.witness] + "," +
                                   token_set_text(S, c.body) + ") is not in con");
    R.ent[k] |= m;
  }
  for (int i = 0; i < R.size(); ++i) {
    int k = R.find_con(i, 0);
    if (k >= 0) R.ent[k] |= bit(R.delta);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < R.con.size(); ++k)
      for (std::size_t l = 0; l < R.con.size(); ++l) {
        if (R.con[k].witness != R.con[l].witness) continue;
        Mask add = 0;
        if (subset_of(R.con[k].body, R.con[l].body)) add |= R.ent[k] & ~R.ent[l];
        if (subset_of(R.con[k].body, R.ent[l])) add |= R.ent[k] & ~R.ent[l];
        if (add) {
          R.ent[l] |= add;
          changed = true;
        }
      }
  }
  return R;
}

}  // namespace iswb
