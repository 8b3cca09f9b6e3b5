#include "iswb/poset.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

int FinPoset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

FinPoset poset_from_pairs(const std::vector<std::string>& names,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  FinPoset P;
  P.names = names;
  int n = P.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j]) fail(Err::DuplicateElem, names[i]);
  P.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) P.leq[i][i] = true;
  for (const auto& [lo, hi] : pairs) {
    int a = P.index_of(lo), b = P.index_of(hi);
    if (a < 0) fail(Err::UnknownElem, lo);
    if (b < 0) fail(Err::UnknownElem, hi);
    P.leq[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (P.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (P.leq[k][j]) P.leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (P.leq[i][j] && P.leq[j][i])
        fail(Err::CycleDetected, names[i] + " <= " + names[j] + " <= " + names[i]);
  return P;
}

namespace {

// up[x] = mask of elements above or equal x, down[x] symmetric. Only used
// while n fits in a mask.
struct MaskView {
  int n;
  std::vector<Mask> up, down;
  explicit MaskView(const FinPoset& P) : n(P.size()), up(n, 0), down(n, 0) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (P.le(x, y)) {
          up[x] |= bit(y);
          down[y] |= bit(x);
        }
  }
};

bool directed_mask(const MaskView& v, Mask s) {
  for (Mask x = s; x; x &= x - 1) {
    int a = lowest_bit(x);
    for (Mask y = x & (x - 1); y; y &= y - 1) {
      int b = lowest_bit(y);
      if ((v.up[a] & v.up[b] & s) == 0) return false;
    }
  }
  return true;
}

// Least element of the nonempty mask u, or -1.
int least_of(const MaskView& v, Mask u) {
  for (Mask x = u; x; x &= x - 1) {
    int c = lowest_bit(x);
    if (subset_of(u, v.up[c])) return c;
  }
  return -1;
}

// Contribution of one directed subset: pairs (x, y) with y below the lub
// and no upper bound of x inside the subset are not in the relation.
void scan_subset(const MaskView& v, Mask s, std::vector<Mask>& bad) {
  Mask ub = full_mask(v.n);
  for (Mask x = s; x; x &= x - 1) ub &= v.up[lowest_bit(x)];
  if (ub == 0) return;
  int m = least_of(v, ub);
  if (m < 0) return;
  Mask cover = 0;
  for (Mask x = s; x; x &= x - 1) cover |= v.down[lowest_bit(x)];
  Mask missing = full_mask(v.n) & ~cover;
  if (missing == 0) return;
  for (Mask y = v.down[m]; y; y &= y - 1) bad[lowest_bit(y)] |= missing;
}

}  // namespace

Relation way_below_scan(const FinPoset& P, Exec exec) {
  int n = P.size();
  if (n > kWayBelowScanCap)
    fail(Err::SizeLimitExceeded, "way_below_scan handles at most " +
                                     std::to_string(kWayBelowScanCap) + " elements");
  MaskView v(P);
  std::vector<Mask> bad(n, 0);
  long long total = 1LL << n;
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<Mask> local(n, 0);
#pragma omp for schedule(static)
      for (long long s = 1; s < total; ++s)
        if (directed_mask(v, static_cast<Mask>(s))) scan_subset(v, static_cast<Mask>(s), local);
#pragma omp critical
      for (int y = 0; y < n; ++y) bad[y] |= local[y];
    }
  } else {
    for (long long s = 1; s < total; ++s)
      if (directed_mask(v, static_cast<Mask>(s))) scan_subset(v, static_cast<Mask>(s), bad);
  }
  Relation wb(n, std::vector<bool>(n, false));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) wb[x][y] = !has_bit(bad[y], x);
  return wb;
}

Relation way_below(const FinPoset& P) {
  // Every directed subset of a finite poset has a maximum, so the directed
  // sets with lub above y are exactly the sets containing some m >= y, and
  // the quantifier collapses to: x is below every m above y.
  int n = P.size();
  Relation wb(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (int m = 0; m < n && ok; ++m)
        if (P.le(y, m) && !P.le(x, m)) ok = false;
      wb[x][y] = ok;
      if (ok != P.le(x, y))
        fail(Err::InternalCheckFailed,
             "way_below disagrees with leq at " + P.names[x] + ", " + P.names[y]);
    }
  return wb;
}

PosetReport analyze(const FinPoset& P) {
  int n = P.size();
  PosetReport r;
  for (int m = 0; m < n; ++m) {
    bool least = true;
    for (int x = 0; x < n && least; ++x)
      if (!P.le(m, x)) least = false;
    if (least) {
      r.pointed = true;
      r.bottom = m;
      break;
    }
  }
  r.bounded_complete = true;
  for (int x = 0; x < n && r.bounded_complete; ++x)
    for (int y = x + 1; y < n && r.bounded_complete; ++y) {
      std::vector<int> ub;
      for (int u = 0; u < n; ++u)
        if (P.le(x, u) && P.le(y, u)) ub.push_back(u);
      if (ub.empty()) continue;
      bool has_least = false;
      for (int c : ub) {
        bool least = true;
        for (int u : ub)
          if (!P.le(c, u)) least = false;
        if (least) has_least = true;
      }
      if (!has_least) {
        r.bounded_complete = false;
        r.bc_counterexample = {x, y};
      }
    }
  r.l_domain = r.pointed;
  for (int z = 0; z < n && r.l_domain; ++z)
    for (int x = 0; x < n && r.l_domain; ++x) {
      if (!P.le(x, z)) continue;
      for (int y = x + 1; y < n && r.l_domain; ++y) {
        if (!P.le(y, z)) continue;
        std::vector<int> ub;
        for (int u = 0; u < n; ++u)
          if (P.le(u, z) && P.le(x, u) && P.le(y, u)) ub.push_back(u);
        bool has_least = false;
        for (int c : ub) {
          bool least = true;
          for (int u : ub)
            if (!P.le(c, u)) least = false;
          if (least) has_least = true;
        }
        if (!has_least) {
          r.l_domain = false;
          r.l_counterexample = LdomCounterexample{z, x, y};
        }
      }
    }
  Relation wb = way_below(P);
  for (int x = 0; x < n; ++x)
    if (wb[x][x]) r.compacts.push_back(x);
  return r;
}

int local_lub(const FinPoset& P, int z, const std::vector<int>& F) {
  int n = P.size();
  if (z < 0 || z >= n) fail(Err::UnknownElem, "element index " + std::to_string(z));
  for (int f : F) {
    if (f < 0 || f >= n) fail(Err::UnknownElem, "element index " + std::to_string(f));
    if (!P.le(f, z)) fail(Err::NotBelowZ, P.names[f] + " is not below " + P.names[z]);
  }
  std::vector<int> ub;
  for (int u = 0; u < n; ++u) {
    if (!P.le(u, z)) continue;
    bool all = true;
    for (int f : F)
      if (!P.le(f, u)) all = false;
    if (all) ub.push_back(u);
  }
  for (int c : ub) {
    bool least = true;
    for (int u : ub)
      if (!P.le(c, u)) least = false;
    if (least) return c;
  }
  fail(Err::NoLocalLub, "no least upper bound below " + P.names[z]);
}

namespace {

struct IsoSearch {
  const FinPoset& P;
  const FinPoset& Q;
  int n;
  std::vector<std::pair<int, int>> sig_p, sig_q;  // (|down|, |up|) per element
  std::vector<int> map, used;

  IsoSearch(const FinPoset& p, const FinPoset& q)
      : P(p), Q(q), n(p.size()), map(n, -1), used(n, 0) {
    sig_p = sigs(P);
    sig_q = sigs(Q);
  }

  static std::vector<std::pair<int, int>> sigs(const FinPoset& R) {
    int n = R.size();
    std::vector<std::pair<int, int>> s(n, {0, 0});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (R.le(y, x)) s[x].first++;
        if (R.le(x, y)) s[x].second++;
      }
    return s;
  }

  bool extend(int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig_p[x] != sig_q[y]) continue;
      bool ok = true;
      for (int x2 = 0; x2 < x && ok; ++x2)
        if (P.le(x, x2) != Q.le(y, map[x2]) || P.le(x2, x) != Q.le(map[x2], y)) ok = false;
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_iso(const FinPoset& P, const FinPoset& Q) {
  if (P.size() > kFindIsoCap || Q.size() > kFindIsoCap)
    fail(Err::SizeLimitExceeded,
         "find_iso handles at most " + std::to_string(kFindIsoCap) + " elements");
  if (P.size() != Q.size()) return std::nullopt;
  IsoSearch s(P, Q);
  if (s.extend(0)) return s.map;
  return std::nullopt;
}

}  // namespace iswb
