#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iswb/bits.hpp"

namespace iswb {

// One consistency entry: a witness token together with a finite body set.
struct ConEntry {
  int witness;
  Mask body;
  bool operator==(const ConEntry&) const = default;
};

// Information system with witnesses. `ent[k]` is the mask of tokens entailed
// by `con[k]`, so entailment lives on consistency entries by construction.
// `con` is kept in canonical order: witness, then body size, then body.
struct Isw {
  std::vector<std::string> tokens;
  int delta = -1;
  std::vector<ConEntry> con;
  std::vector<Mask> ent;

  int size() const { return static_cast<int>(tokens.size()); }
  int token_index(const std::string& name) const;
  int find_con(int witness, Mask body) const;  // -1 when absent
  Mask entailed(int con_index) const { return ent[con_index]; }
  bool operator==(const Isw&) const = default;
};

// Normalises order, checks structural well-formedness (token count, index
// ranges, duplicates), and pairs ent masks with their entries.
Isw make_isw(std::vector<std::string> tokens, int delta, std::vector<ConEntry> con,
             std::vector<Mask> ent);

struct IswBuilder {
  std::vector<std::string> tokens;
  int delta = -1;
  std::vector<std::pair<ConEntry, Mask>> entries;

  IswBuilder& token(const std::string& t);
  IswBuilder& con(int witness, Mask body);
  IswBuilder& ent(int witness, Mask body, Mask entailed);
  Isw build() const;
};

constexpr int kValidateTokenCap = 16;
constexpr int kValidateConCap = 4096;
constexpr int kIswTokenCap = 64;

struct AxiomVerdict {
  bool holds = true;
  std::string counterexample;  // empty when the axiom holds
};

struct ValidationReport {
  std::vector<AxiomVerdict> axioms;
  bool valid() const;
  int held() const;
};

// The ten defining axioms, each reported with the first counterexample in
// canonical order. Token count is capped at kValidateTokenCap.
ValidationReport validate_isw(const Isw& S);

bool entails(const Isw& S, int witness, Mask body, int a);  // NotConsistent when absent
bool entails_set(const Isw& S, int con_index, Mask Y);
bool entails_pair(const Isw& S, int con_index, int e, Mask Z);

enum class Condition { BC, ALG, SALG, ALGP };

struct ConditionReport {
  Condition which;
  bool holds = true;
  std::string counterexample;
  std::vector<int> con_refl;  // entries used by the ALG check
};

// Extra conditions on a valid system. InvalidSystem when validation fails.
ConditionReport check_condition(const Isw& S, Condition which);

// Entries (j, V) entailing their own witness and body.
std::vector<int> reflexive_pairs(const Isw& S);
// Tokens j with (j, {j}) entailing j.
std::vector<int> reflexive_tokens(const Isw& S);

// Least entailment extending `seed` that is closed under bottom membership,
// monotonicity in the body and cut. Consistency is left untouched.
Isw entailment_closure(const Isw& S, const std::vector<std::pair<ConEntry, Mask>>& seed);

std::string token_set_text(const Isw& S, Mask m);
std::string con_entry_text(const Isw& S, int con_index);

}  // namespace iswb
