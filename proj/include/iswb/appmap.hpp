#pragma once

#include <string>
#include <vector>

#include "iswb/isw.hpp"
#include "iswb/states.hpp"

namespace iswb {

// Approximable mapping between two systems: a relation from consistency
// entries of the source to tokens of the target, stored as one target mask
// per source entry.
struct ApproxMap {
  Isw source;
  Isw target;
  std::vector<Mask> rel;  // aligned with source.con

  bool operator==(const ApproxMap&) const = default;
};

ApproxMap make_map(Isw source, Isw target, std::vector<Mask> rel);

struct MapValidationReport {
  std::vector<AxiomVerdict> axioms;  // six of them
  bool split_checked = false;        // split form evaluated when axioms 1-4 hold
  bool split_agrees = true;
  bool valid() const;
  int held() const;
};

// The six mapping axioms with first counterexamples in canonical order.
// When axioms 1-4 hold, the interpolation axiom is also evaluated in its
// two-part split form and both verdicts must agree.
MapValidationReport validate_map(const ApproxMap& H);

ApproxMap identity_map(const Isw& S);

// Diagrammatic composite: first H, then G. SystemMismatch unless H's target
// equals G's source.
ApproxMap compose(const ApproxMap& H, const ApproxMap& G);

// State function induced by a mapping: union of images of entries inside x.
Mask apply_map(const ApproxMap& H, Mask x);

// Total table of apply_map over the source states, in canonical order.
struct StateFn {
  std::vector<std::pair<Mask, Mask>> table;
  bool operator==(const StateFn&) const = default;
};

StateFn fn_from_map(const ApproxMap& H);

// Mapping induced by a monotone state function: an entry is related to the
// members of the image of its principal state. Inverse to fn_from_map.
ApproxMap map_from_fn(const Isw& S, const Isw& T, const StateFn& f);

constexpr long long kMonotoneFnCap = 256;

// All monotone functions between two state sets, capped at kMonotoneFnCap
// candidates before the monotonicity filter.
std::vector<StateFn> enumerate_monotone_fns(const Isw& S, const Isw& T);

}  // namespace iswb
