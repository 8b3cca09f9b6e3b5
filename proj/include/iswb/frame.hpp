#pragma once

#include <string>
#include <vector>

#include "iswb/isw.hpp"
#include "iswb/poset.hpp"

namespace iswb {

// Information frame: one consistency predicate and one entailment relation
// per token. The accessibility preorder is never stored; it is always read
// off as i R j iff {i} is consistent at j.
struct FrameNode {
  std::vector<Mask> bodies;  // canonical order
  std::vector<Mask> ent;     // aligned entailment masks

  bool operator==(const FrameNode&) const = default;
};

struct Frame {
  std::vector<std::string> tokens;
  int delta = -1;
  std::vector<FrameNode> nodes;

  int size() const { return static_cast<int>(tokens.size()); }
  int token_index(const std::string& name) const;
  int find_body(int i, Mask X) const;  // -1 when absent
  bool operator==(const Frame&) const = default;
};

Frame make_frame(std::vector<std::string> tokens, int delta,
                 std::vector<FrameNode> nodes);

Relation accessibility(const Frame& F);

// The twelve defining axioms in the order printed, with the singleton
// accessibility axiom structurally true under the derived relation.
ValidationReport validate_frame(const Frame& F);

// Combined interpolation form: every entailed set interpolates through a
// consistent body at some entailed witness. Equivalent to axioms 7 and 12
// under the remaining axioms; the tests compare the two routes.
bool frame_global_interpolation(const Frame& F);

// Unvalidated structural rewrites between the two presentations.
Isw isw_view(const Frame& F);
Frame frame_view(const Isw& S);

// Validated conversions. Either direction preserves validity; both gates
// re-check the result.
Isw frame_to_isw(const Frame& F);
Frame isw_to_frame(const Isw& S);

std::string frame_set_text(const Frame& F, Mask m);

}  // namespace iswb
