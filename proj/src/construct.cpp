#include "iswb/construct.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

Isw terminal_system() {
  IswBuilder b;
  b.token("D");
  b.delta = 0;
  b.con(0, 0);
  b.con(0, bit(0));
  b.ent(0, 0, bit(0));
  b.ent(0, bit(0), bit(0));
  return b.build();
}

ApproxMap terminal_map(const Isw& S) {
  Isw T = terminal_system();
  std::vector<Mask> rel(S.con.size(), bit(0));
  return make_map(S, std::move(T), std::move(rel));
}

int count_terminal_maps(const Isw& S) {
  int m = static_cast<int>(S.con.size());
  if (m > kUniqueRelCap)
    fail(Err::SizeLimitExceeded,
         "count_terminal_maps handles at most " + std::to_string(kUniqueRelCap) + " entries");
  Isw T = terminal_system();
  int found = 0;
  for (Mask pick = 0; pick < (Mask{1} << m); ++pick) {
    std::vector<Mask> rel(m, 0);
    for (int k = 0; k < m; ++k)
      if (has_bit(pick, k)) rel[k] = bit(0);
    ApproxMap H = make_map(S, T, std::move(rel));
    bool ok = true;
    try {
      ok = validate_map(H).valid();
    } catch (const IswbError&) {
      ok = false;
    }
    if (ok) ++found;
  }
  return found;
}

int ProductSystem::pair_index(int a1, int a2) const { return a1 * right.size() + a2; }

Mask ProductSystem::outer(Mask m1, Mask m2) const {
  Mask out = 0;
  for (Mask x = m1; x; x &= x - 1)
    for (Mask y = m2; y; y &= y - 1) out |= bit(pair_index(lowest_bit(x), lowest_bit(y)));
  return out;
}

Mask ProductSystem::left_of(Mask m) const {
  Mask out = 0;
  for (Mask x = m; x; x &= x - 1) out |= bit(lowest_bit(x) / right.size());
  return out;
}

Mask ProductSystem::right_of(Mask m) const {
  Mask out = 0;
  for (Mask x = m; x; x &= x - 1) out |= bit(lowest_bit(x) % right.size());
  return out;
}

ProductSystem product_system(const Isw& S1, const Isw& S2) {
  int n1 = S1.size(), n2 = S2.size();
  if (n1 * n2 > kProductTokenCap)
    fail(Err::SizeLimitExceeded,
         "product has more than " + std::to_string(kProductTokenCap) + " token pairs");
  if (n1 * n2 > kProductEnumCap)
    fail(Err::SizeLimitExceeded, "product consistency enumeration handles at most " +
                                     std::to_string(kProductEnumCap) + " token pairs");
  ProductSystem P;
  P.left = S1;
  P.right = S2;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n1) * n2);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2) names.push_back("(" + S1.tokens[a1] + "," + S2.tokens[a2] + ")");
  int np = n1 * n2;
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  std::vector<Mask> rel1, rel2;
  for (int w1 = 0; w1 < n1; ++w1)
    for (int w2 = 0; w2 < n2; ++w2) {
      int w = w1 * n2 + w2;
      for (Mask X = 0; X < (Mask{1} << np); ++X) {
        Mask p1 = 0, p2 = 0;
        for (Mask x = X; x; x &= x - 1) {
          p1 |= bit(lowest_bit(x) / n2);
          p2 |= bit(lowest_bit(x) % n2);
        }
        int k1 = S1.find_con(w1, p1);
        int k2 = S2.find_con(w2, p2);
        if (k1 < 0 || k2 < 0) continue;
        con.push_back({w, X});
        Mask m1 = S1.ent[k1], m2 = S2.ent[k2];
        Mask e = 0;
        for (Mask a = m1; a; a &= a - 1)
          for (Mask b = m2; b; b &= b - 1) e |= bit(lowest_bit(a) * n2 + lowest_bit(b));
        ent.push_back(e);
        rel1.push_back(m1);
        rel2.push_back(m2);
      }
    }
  Isw prod = make_isw(names, S1.delta * n2 + S2.delta, con, ent);
  // make_isw reorders entries; rebuild the projection relations in its order
  std::vector<Mask> r1(prod.con.size()), r2(prod.con.size());
  for (std::size_t k = 0; k < prod.con.size(); ++k) {
    Mask p1 = 0, p2 = 0;
    for (Mask x = prod.con[k].body; x; x &= x - 1) {
      p1 |= bit(lowest_bit(x) / n2);
      p2 |= bit(lowest_bit(x) % n2);
    }
    r1[k] = S1.ent[S1.find_con(prod.con[k].witness / n2, p1)];
    r2[k] = S2.ent[S2.find_con(prod.con[k].witness % n2, p2)];
  }
  P.product = prod;
  P.pr1 = make_map(P.product, S1, std::move(r1));
  P.pr2 = make_map(P.product, S2, std::move(r2));
  return P;
}

ApproxMap pairing(const ProductSystem& P, const ApproxMap& H1, const ApproxMap& H2) {
  if (!(H1.source == H2.source)) fail(Err::SystemMismatch, "pairing sources differ");
  if (!(H1.target == P.left) || !(H2.target == P.right))
    fail(Err::SystemMismatch, "pairing targets are not the product factors");
  std::vector<Mask> rel(H1.source.con.size(), 0);
  for (std::size_t k = 0; k < rel.size(); ++k) rel[k] = P.outer(H1.rel[k], H2.rel[k]);
  return make_map(H1.source, P.product, std::move(rel));
}

}  // namespace iswb
