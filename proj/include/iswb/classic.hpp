#pragma once

#include <string>
#include <vector>

#include "iswb/isw.hpp"

namespace iswb {

// Continuous information system: witness-free consistency and entailment
// between consistent sets and tokens.
struct Cis {
  std::vector<std::string> tokens;
  std::vector<Mask> con;  // canonical order
  std::vector<Mask> ent;  // aligned entailment masks

  int size() const { return static_cast<int>(tokens.size()); }
  int token_index(const std::string& name) const;
  int find_con(Mask X) const;
  bool operator==(const Cis&) const = default;
};

Cis make_cis(std::vector<std::string> tokens, std::vector<Mask> con, std::vector<Mask> ent);

// Algebraic variant: a distinguished token and reflexive entailment.
struct Ais {
  std::vector<std::string> tokens;
  int delta = -1;
  std::vector<Mask> con;
  std::vector<Mask> ent;

  int size() const { return static_cast<int>(tokens.size()); }
  int token_index(const std::string& name) const;
  int find_con(Mask X) const;
  bool operator==(const Ais&) const = default;
};

Ais make_ais(std::vector<std::string> tokens, int delta, std::vector<Mask> con,
             std::vector<Mask> ent);

// Six axioms each. The interpolation axiom of a continuous system is an
// equivalence and both directions are checked.
ValidationReport validate_cis(const Cis& C);

// The transitivity axiom is read as a cut rule. With strict=true the
// printed reverse-monotonicity form is evaluated as well and reported in a
// seventh slot without affecting validity.
ValidationReport validate_ais(const Ais& A, bool strict = false);

std::vector<Mask> cis_points(const Cis& C, Exec exec = Exec::Serial);
std::vector<Mask> ais_points(const Ais& A, Exec exec = Exec::Serial);

// Fresh-token extension: adds a bottom witness below everything. The fresh
// token is named kFreshToken; a clash is an error, never a rename.
extern const char* const kFreshToken;

Isw isw_from_cis(const Cis& C);

// Witness collapse: needs the BC condition so entailment is independent of
// the witness. States and points then coincide literally.
Cis cis_from_isw(const Isw& S);

// Every token witnesses every body.
Isw isw_from_ais(const Ais& A);

// Restriction to reflexive tokens; needs BC and the strong algebraicity
// condition.
Ais ais_from_isw(const Isw& S);

std::string cis_set_text(const Cis& C, Mask m);
std::string ais_set_text(const Ais& A, Mask m);

}  // namespace iswb
