#include "iswb/classic.hpp"

#include <algorithm>

#include "iswb/errors.hpp"
#include "iswb/kernels.hpp"

namespace iswb {

const char* const kFreshToken = "⊥ε";

namespace {

template <class Sys>
std::string set_text(const Sys& S, Mask m) {
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

template <class Sys>
void normalise(Sys& S, const char* what) {
  int n = S.size();
  if (n == 0) fail(Err::MalformedSystem, std::string("no tokens in ") + what);
  if (n > kIswTokenCap)
    fail(Err::SizeLimitExceeded, "at most " + std::to_string(kIswTokenCap) + " tokens");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (S.tokens[i] == S.tokens[j]) fail(Err::MalformedSystem, "duplicate token " + S.tokens[i]);
  if (S.con.size() != S.ent.size()) fail(Err::MalformedSystem, "ent not aligned with con");
  Mask all = full_mask(n);
  std::vector<int> order(S.con.size());
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    if (!subset_of(S.con[k], all)) fail(Err::MalformedSystem, "body out of range");
    if (!subset_of(S.ent[k], all)) fail(Err::MalformedSystem, "ent out of range");
    order[k] = static_cast<int>(k);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return mask_canonical_less(S.con[a], S.con[b]); });
  std::vector<Mask> con, ent;
  for (int k : order) {
    if (!con.empty() && con.back() == S.con[k]) fail(Err::MalformedSystem, "duplicate body");
    con.push_back(S.con[k]);
    ent.push_back(S.ent[k]);
  }
  S.con = std::move(con);
  S.ent = std::move(ent);
}

template <class Sys>
int find_body(const Sys& S, Mask X) {
  auto it = std::lower_bound(S.con.begin(), S.con.end(), X, mask_canonical_less);
  if (it == S.con.end() || *it != X) return -1;
  return static_cast<int>(it - S.con.begin());
}

template <class Sys>
Mask ent_of(const Sys& S, Mask X) {
  int k = find_body(S, X);
  return k < 0 ? 0 : S.ent[k];
}

}  // namespace

int Cis::token_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (tokens[i] == name) return i;
  return -1;
}

int Cis::find_con(Mask X) const { return find_body(*this, X); }

int Ais::token_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (tokens[i] == name) return i;
  return -1;
}

int Ais::find_con(Mask X) const { return find_body(*this, X); }

std::string cis_set_text(const Cis& C, Mask m) { return set_text(C, m); }
std::string ais_set_text(const Ais& A, Mask m) { return set_text(A, m); }

Cis make_cis(std::vector<std::string> tokens, std::vector<Mask> con, std::vector<Mask> ent) {
  Cis C;
  C.tokens = std::move(tokens);
  C.con = std::move(con);
  C.ent = std::move(ent);
  normalise(C, "cis");
  return C;
}

Ais make_ais(std::vector<std::string> tokens, int delta, std::vector<Mask> con,
             std::vector<Mask> ent) {
  Ais A;
  A.tokens = std::move(tokens);
  A.delta = delta;
  A.con = std::move(con);
  A.ent = std::move(ent);
  if (delta < 0 || delta >= A.size()) fail(Err::MalformedSystem, "delta is not a token");
  normalise(A, "ais");
  return A;
}

ValidationReport validate_cis(const Cis& C) {
  if (C.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "validate_cis handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  ValidationReport r;
  r.axioms.resize(6);
  // (1) empty set consistent
  if (C.find_con(0) < 0) r.axioms[0] = {false, "{} is not consistent"};
  // (2) downward closure
  for (std::size_t k = 0; k < C.con.size() && r.axioms[1].holds; ++k)
    for (Mask Y : submasks_canonical(C.con[k]))
      if (C.find_con(Y) < 0) {
        r.axioms[1] = {false, "X=" + set_text(C, C.con[k]) + " Y=" + set_text(C, Y)};
        break;
      }
  // (3) singletons consistent
  for (int a = 0; a < C.size() && r.axioms[2].holds; ++a)
    if (C.find_con(bit(a)) < 0) r.axioms[2] = {false, "token=" + C.tokens[a]};
  // (4) entailed sets consistent
  for (std::size_t k = 0; k < C.con.size() && r.axioms[3].holds; ++k)
    for (Mask Y : submasks_canonical(C.ent[k]))
      if (C.find_con(Y) < 0) {
        r.axioms[3] = {false, "X=" + set_text(C, C.con[k]) + " Y=" + set_text(C, Y)};
        break;
      }
  // (5) monotone in the body
  for (std::size_t k = 0; k < C.con.size() && r.axioms[4].holds; ++k)
    for (std::size_t l = 0; l < C.con.size(); ++l) {
      if (!subset_of(C.con[k], C.con[l])) continue;
      Mask lost = C.ent[k] & ~C.ent[l];
      if (lost) {
        r.axioms[4] = {false, "X=" + set_text(C, C.con[k]) + " Y=" + set_text(C, C.con[l]) +
                                  " token=" + C.tokens[lowest_bit(lost)]};
        break;
      }
    }
  // (6) interpolation, both directions of the equivalence
  for (std::size_t k = 0; k < C.con.size() && r.axioms[5].holds; ++k) {
    Mask M = C.ent[k];
    for (Mask am = M; am; am &= am - 1) {
      int a = lowest_bit(am);
      bool ok = false;
      for (std::size_t l = 0; l < C.con.size() && !ok; ++l)
        if (subset_of(C.con[l], M) && has_bit(C.ent[l], a)) ok = true;
      if (!ok) {
        r.axioms[5] = {false, "X=" + set_text(C, C.con[k]) + " token=" + C.tokens[a] +
                                  " (no interpolant)"};
        break;
      }
    }
    if (!r.axioms[5].holds) break;
    for (std::size_t l = 0; l < C.con.size(); ++l) {
      if (!subset_of(C.con[l], M)) continue;
      Mask lost = C.ent[l] & ~M;
      if (lost) {
        r.axioms[5] = {false, "X=" + set_text(C, C.con[k]) + " Z=" + set_text(C, C.con[l]) +
                                  " token=" + C.tokens[lowest_bit(lost)] + " (cut direction)"};
        break;
      }
    }
  }
  return r;
}

ValidationReport validate_ais(const Ais& A, bool strict) {
  if (A.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "validate_ais handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  ValidationReport r;
  r.axioms.resize(6);
  // (1) downward closure
  for (std::size_t k = 0; k < A.con.size() && r.axioms[0].holds; ++k)
    for (Mask Y : submasks_canonical(A.con[k]))
      if (A.find_con(Y) < 0) {
        r.axioms[0] = {false, "X=" + set_text(A, A.con[k]) + " Y=" + set_text(A, Y)};
        break;
      }
  // (2) singletons consistent
  for (int a = 0; a < A.size() && r.axioms[1].holds; ++a)
    if (A.find_con(bit(a)) < 0) r.axioms[1] = {false, "token=" + A.tokens[a]};
  // (3) adjoining an entailed token keeps consistency
  for (std::size_t k = 0; k < A.con.size() && r.axioms[2].holds; ++k)
    for (Mask am = A.ent[k]; am; am &= am - 1) {
      int a = lowest_bit(am);
      if (A.find_con(A.con[k] | bit(a)) < 0) {
        r.axioms[2] = {false, "X=" + set_text(A, A.con[k]) + " token=" + A.tokens[a]};
        break;
      }
    }
  // (4) everything entails delta
  for (std::size_t k = 0; k < A.con.size() && r.axioms[3].holds; ++k)
    if (!has_bit(A.ent[k], A.delta)) r.axioms[3] = {false, "X=" + set_text(A, A.con[k])};
  // (5) cut rule
  for (std::size_t k = 0; k < A.con.size() && r.axioms[4].holds; ++k)
    for (std::size_t l = 0; l < A.con.size(); ++l) {
      if (!subset_of(A.con[l], A.ent[k])) continue;
      Mask lost = A.ent[l] & ~A.ent[k];
      if (lost) {
        r.axioms[4] = {false, "X=" + set_text(A, A.con[k]) + " Y=" + set_text(A, A.con[l]) +
                                  " token=" + A.tokens[lowest_bit(lost)]};
        break;
      }
    }
  // (6) members are entailed
  for (std::size_t k = 0; k < A.con.size() && r.axioms[5].holds; ++k) {
    Mask lost = A.con[k] & ~A.ent[k];
    if (lost)
      r.axioms[5] = {false, "X=" + set_text(A, A.con[k]) + " token=" + A.tokens[lowest_bit(lost)]};
  }
  if (strict) {
    // Printed reverse-monotone form, reported only: X |- Y and X |- a force
    // Y |- a. Informational; the cut reading above is the one that counts.
    AxiomVerdict printed;
    for (std::size_t k = 0; k < A.con.size() && printed.holds; ++k)
      for (std::size_t l = 0; l < A.con.size(); ++l) {
        if (!subset_of(A.con[l], A.ent[k])) continue;
        Mask lost = A.ent[k] & ~A.ent[l];
        if (lost) {
          printed = {false, "X=" + set_text(A, A.con[k]) + " Y=" + set_text(A, A.con[l]) +
                                " token=" + A.tokens[lowest_bit(lost)]};
          break;
        }
      }
    r.axioms.push_back(printed);
  }
  return r;
}

std::vector<Mask> cis_points(const Cis& C, Exec exec) {
  if (C.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "cis_points handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  auto point = [&](Mask x) {
    for (Mask F : submasks_canonical(x))
      if (C.find_con(F) < 0) return false;
    // self-approximation: every finite part is entailed from inside
    for (Mask F : submasks_canonical(x)) {
      bool ok = false;
      for (std::size_t k = 0; k < C.con.size() && !ok; ++k)
        if (subset_of(C.con[k], x) && subset_of(F, C.ent[k])) ok = true;
      if (!ok) return false;
    }
    for (std::size_t k = 0; k < C.con.size(); ++k)
      if (subset_of(C.con[k], x) && (C.ent[k] & ~x)) return false;
    return true;
  };
  std::vector<Mask> out = filter_subsets(C.size(), exec, point);
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

std::vector<Mask> ais_points(const Ais& A, Exec exec) {
  if (A.size() > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "ais_points handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  auto point = [&](Mask x) {
    for (Mask F : submasks_canonical(x))
      if (A.find_con(F) < 0) return false;
    for (std::size_t k = 0; k < A.con.size(); ++k)
      if (subset_of(A.con[k], x) && (A.ent[k] & ~x)) return false;
    return true;
  };
  std::vector<Mask> out = filter_subsets(A.size(), exec, point);
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

Isw isw_from_cis(const Cis& C) {
  ValidationReport v = validate_cis(C);
  if (!v.valid()) fail(Err::InvalidSystem, "continuous system fails validation");
  for (const std::string& t : C.tokens)
    if (t == kFreshToken) fail(Err::FreshTokenClash, std::string("token ") + kFreshToken +
                                                         " already present");
  int n = C.size();
  if (n + 1 > kIswTokenCap) fail(Err::SizeLimitExceeded, "no room for the fresh token");
  std::vector<std::string> tokens = C.tokens;
  tokens.push_back(kFreshToken);
  int eps = n;
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (int i = 0; i <= n; ++i)
    for (std::size_t k = 0; k < C.con.size(); ++k) {
      con.push_back({i, C.con[k]});
      ent.push_back(C.ent[k] | bit(eps));
      con.push_back({i, C.con[k] | bit(eps)});
      ent.push_back(C.ent[k] | bit(eps));
    }
  Isw S = make_isw(std::move(tokens), eps, std::move(con), std::move(ent));
  if (!validate_isw(S).valid())
    fail(Err::InternalCheckFailed, "fresh-token extension fails the system axioms");
  return S;
}

Cis cis_from_isw(const Isw& S) {
  ValidationReport v = validate_isw(S);
  if (!v.valid()) fail(Err::InvalidSystem, "system fails validation");
  ConditionReport bc = check_condition(S, Condition::BC);
  if (!bc.holds) fail(Err::BcViolated, bc.counterexample);
  std::vector<Mask> con, ent;
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    if (!con.empty()) {
      bool seen = false;
      for (Mask b : con)
        if (b == S.con[k].body) seen = true;
      if (seen) continue;
    }
    Mask m = 0;
    for (std::size_t l = 0; l < S.con.size(); ++l)
      if (S.con[l].body == S.con[k].body) m |= S.ent[l];
    con.push_back(S.con[k].body);
    ent.push_back(m);
  }
  Cis C = make_cis(S.tokens, std::move(con), std::move(ent));
  if (!validate_cis(C).valid())
    fail(Err::InternalCheckFailed, "witness collapse fails the continuous axioms");
  return C;
}

Isw isw_from_ais(const Ais& A) {
  ValidationReport v = validate_ais(A);
  if (!v.valid()) fail(Err::InvalidSystem, "algebraic system fails validation");
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (int i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < A.con.size(); ++k) {
      con.push_back({i, A.con[k]});
      ent.push_back(A.ent[k]);
    }
  Isw S = make_isw(A.tokens, A.delta, std::move(con), std::move(ent));
  if (!validate_isw(S).valid())
    fail(Err::InternalCheckFailed, "witness spread fails the system axioms");
  return S;
}

Ais ais_from_isw(const Isw& S) {
  ValidationReport v = validate_isw(S);
  if (!v.valid()) fail(Err::InvalidSystem, "system fails validation");
  ConditionReport bc = check_condition(S, Condition::BC);
  if (!bc.holds) fail(Err::BcViolated, bc.counterexample);
  ConditionReport ap = check_condition(S, Condition::ALGP);
  if (!ap.holds) fail(Err::AlgPlusViolated, ap.counterexample);
  std::vector<int> refl = reflexive_tokens(S);
  std::vector<int> place(S.size(), -1);
  std::vector<std::string> tokens;
  for (std::size_t a = 0; a < refl.size(); ++a) {
    place[refl[a]] = static_cast<int>(a);
    tokens.push_back(S.tokens[refl[a]]);
  }
  if (place[S.delta] < 0)
    fail(Err::InternalCheckFailed, "delta is not reflexive in a valid system");
  Mask refl_mask = 0;
  for (int t : refl) refl_mask |= bit(t);
  auto shrink = [&](Mask m) {
    Mask out = 0;
    for (Mask x = m & refl_mask; x; x &= x - 1) out |= bit(place[lowest_bit(x)]);
    return out;
  };
  std::vector<Mask> con, ent;
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    if (!has_bit(refl_mask, S.con[k].witness)) continue;
    if (!subset_of(S.con[k].body, refl_mask)) continue;
    Mask body = shrink(S.con[k].body);
    bool seen = false;
    for (Mask b : con)
      if (b == body) seen = true;
    if (seen) continue;
    con.push_back(body);
    ent.push_back(shrink(S.ent[k]));
  }
  Ais A = make_ais(std::move(tokens), place[S.delta], std::move(con), std::move(ent));
  if (!validate_ais(A).valid())
    fail(Err::InternalCheckFailed, "reflexive restriction fails the algebraic axioms");
  return A;
}

}  // namespace iswb
