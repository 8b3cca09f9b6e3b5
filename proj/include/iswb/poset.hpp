#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iswb/bits.hpp"

namespace iswb {

// Finite partial order. `leq` holds the full relation and is reflexive,
// transitive and antisymmetric by construction.
struct FinPoset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(names.size()); }
  bool le(int x, int y) const { return leq[x][y]; }
  int index_of(const std::string& name) const;
  bool operator==(const FinPoset& o) const { return names == o.names && leq == o.leq; }
};

using Relation = std::vector<std::vector<bool>>;

struct LdomCounterexample {
  int z, x, y;
};

struct PosetReport {
  bool pointed = false;
  int bottom = -1;
  bool bounded_complete = false;
  std::optional<std::pair<int, int>> bc_counterexample;
  bool l_domain = false;
  std::optional<LdomCounterexample> l_counterexample;
  std::vector<int> compacts;
};

// Directed-subset enumeration is 2^n; beyond this we fall back to the
// equivalent maximal-element quantifier.
constexpr int kWayBelowScanCap = 20;
constexpr int kFindIsoCap = 12;

// Builds the reflexive transitive closure of `pairs` over `names` and
// rejects cycles between distinct elements.
FinPoset poset_from_pairs(const std::vector<std::string>& names,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

// x approximates y: every directed set whose least upper bound dominates y
// already contains an upper bound of x. On finite posets this coincides
// with leq; way_below cross-checks the two routes.
Relation way_below(const FinPoset& P);

// Brute-force route: scans every directed subset. Serial and OpenMP
// variants must agree bit for bit.
Relation way_below_scan(const FinPoset& P, Exec exec);

PosetReport analyze(const FinPoset& P);

// Least upper bound of F taken inside the principal ideal of z.
int local_lub(const FinPoset& P, int z, const std::vector<int>& F);

// First order isomorphism in candidate order, if any. Both posets are
// capped at kFindIsoCap elements.
std::optional<std::vector<int>> find_iso(const FinPoset& P, const FinPoset& Q);

}  // namespace iswb
