#include "iswb/frame.hpp"

#include <algorithm>

#include "iswb/errors.hpp"

namespace iswb {

int Frame::token_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (tokens[i] == name) return i;
  return -1;
}

int Frame::find_body(int i, Mask X) const {
  const auto& b = nodes[i].bodies;
  auto it = std::lower_bound(b.begin(), b.end(), X, mask_canonical_less);
  if (it == b.end() || *it != X) return -1;
  return static_cast<int>(it - b.begin());
}

std::string frame_set_text(const Frame& F, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < F.size(); ++i)
    if (has_bit(m, i)) {
      if (!first) out += ",";
      out += F.tokens[i];
      first = false;
    }
  return out + "}";
}

Frame make_frame(std::vector<std::string> tokens, int delta, std::vector<FrameNode> nodes) {
  int n = static_cast<int>(tokens.size());
  if (n == 0) fail(Err::MalformedFrame, "no tokens");
  if (n > kIswTokenCap)
    fail(Err::SizeLimitExceeded, "at most " + std::to_string(kIswTokenCap) + " tokens");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (tokens[i] == tokens[j]) fail(Err::MalformedFrame, "duplicate token " + tokens[i]);
  if (delta < 0 || delta >= n) fail(Err::MalformedFrame, "delta is not a token");
  if (static_cast<int>(nodes.size()) != n) fail(Err::MalformedFrame, "nodes not aligned");
  Mask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    FrameNode& nd = nodes[i];
    if (nd.bodies.size() != nd.ent.size()) fail(Err::MalformedFrame, "ent not aligned at " + tokens[i]);
    std::vector<int> order(nd.bodies.size());
    for (std::size_t k = 0; k < nd.bodies.size(); ++k) {
      if (!subset_of(nd.bodies[k], all)) fail(Err::MalformedFrame, "body out of range");
      if (!subset_of(nd.ent[k], all)) fail(Err::MalformedFrame, "ent out of range");
      order[k] = static_cast<int>(k);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return mask_canonical_less(nd.bodies[a], nd.bodies[b]); });
    FrameNode sorted;
    for (int k : order) {
      if (!sorted.bodies.empty() && sorted.bodies.back() == nd.bodies[k])
        fail(Err::MalformedFrame, "duplicate body at " + tokens[i]);
      sorted.bodies.push_back(nd.bodies[k]);
      sorted.ent.push_back(nd.ent[k]);
    }
    nd = std::move(sorted);
  }
  Frame F;
  F.tokens = std::move(tokens);
  F.delta = delta;
  F.nodes = std::move(nodes);
  return F;
}

Relation accessibility(const Frame& F) {
  int n = F.size();
  Relation R(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R[i][j] = F.find_body(j, bit(i)) >= 0;
  return R;
}

namespace {

Mask ent_mask(const Frame& F, int i, Mask X) {
  int k = F.find_body(i, X);
  return k < 0 ? 0 : F.nodes[i].ent[k];
}

std::string cx(const Frame& F, int i, Mask X) {
  return "i=" + F.tokens[i] + " X=" + frame_set_text(F, X);
}

}  // namespace

ValidationReport validate_frame(const Frame& F) {
  int n = F.size();
  if (n > kValidateTokenCap)
    fail(Err::SizeLimitExceeded,
         "validate_frame handles at most " + std::to_string(kValidateTokenCap) + " tokens");
  std::size_t entries = 0;
  for (const auto& nd : F.nodes) entries += nd.bodies.size();
  if (entries > kValidateConCap)
    fail(Err::SizeLimitExceeded, "validate_frame handles at most " +
                                     std::to_string(kValidateConCap) + " bodies");
  ValidationReport r;
  r.axioms.resize(12);
  // (1) self-membership
  for (int i = 0; i < n && r.axioms[0].holds; ++i)
    if (F.find_body(i, bit(i)) < 0) r.axioms[0] = {false, "i=" + F.tokens[i]};
  // (2) downward closure
  for (int i = 0; i < n && r.axioms[1].holds; ++i)
    for (Mask X : F.nodes[i].bodies) {
      bool done = false;
      for (Mask Y : submasks_canonical(X))
        if (F.find_body(i, Y) < 0) {
          r.axioms[1] = {false, cx(F, i, X) + " Y=" + frame_set_text(F, Y)};
          done = true;
          break;
        }
      if (done) break;
    }
  // (3) empty set entails delta
  for (int i = 0; i < n && r.axioms[2].holds; ++i)
    if (!has_bit(ent_mask(F, i, 0), F.delta)) r.axioms[2] = {false, "i=" + F.tokens[i]};
  // (4) entailment preserves consistency
  for (int i = 0; i < n && r.axioms[3].holds; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k) {
      bool done = false;
      for (Mask Y : submasks_canonical(F.nodes[i].ent[k]))
        if (F.find_body(i, Y) < 0) {
          r.axioms[3] = {false, cx(F, i, F.nodes[i].bodies[k]) + " Y=" + frame_set_text(F, Y)};
          done = true;
          break;
        }
      if (done) break;
    }
  // (5) monotone in the body
  for (int i = 0; i < n && r.axioms[4].holds; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size() && r.axioms[4].holds; ++k)
      for (std::size_t l = 0; l < F.nodes[i].bodies.size(); ++l) {
        if (!subset_of(F.nodes[i].bodies[k], F.nodes[i].bodies[l])) continue;
        Mask lost = F.nodes[i].ent[k] & ~F.nodes[i].ent[l];
        if (lost) {
          r.axioms[4] = {false, cx(F, i, F.nodes[i].bodies[k]) +
                                    " Y=" + frame_set_text(F, F.nodes[i].bodies[l]) +
                                    " token=" + F.tokens[lowest_bit(lost)]};
          break;
        }
      }
  // (6) cut
  for (int i = 0; i < n && r.axioms[5].holds; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size() && r.axioms[5].holds; ++k)
      for (std::size_t l = 0; l < F.nodes[i].bodies.size(); ++l) {
        if (!subset_of(F.nodes[i].bodies[l], F.nodes[i].ent[k])) continue;
        Mask lost = F.nodes[i].ent[l] & ~F.nodes[i].ent[k];
        if (lost) {
          r.axioms[5] = {false, cx(F, i, F.nodes[i].bodies[k]) +
                                    " Y=" + frame_set_text(F, F.nodes[i].bodies[l]) +
                                    " token=" + F.tokens[lowest_bit(lost)]};
          break;
        }
      }
  // (7) interpolation inside one node
  for (int i = 0; i < n && r.axioms[6].holds; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size() && r.axioms[6].holds; ++k) {
      Mask M = F.nodes[i].ent[k];
      for (Mask am = M; am; am &= am - 1) {
        int a = lowest_bit(am);
        bool ok = false;
        for (std::size_t l = 0; l < F.nodes[i].bodies.size() && !ok; ++l)
          if (subset_of(F.nodes[i].bodies[l], M) && has_bit(F.nodes[i].ent[l], a)) ok = true;
        if (!ok) {
          r.axioms[6] = {false, cx(F, i, F.nodes[i].bodies[k]) + " token=" + F.tokens[a]};
          break;
        }
      }
    }
  // (8) accessibility grows consistency
  for (int i = 0; i < n && r.axioms[7].holds; ++i)
    for (int j = 0; j < n && r.axioms[7].holds; ++j) {
      if (F.find_body(i, bit(j)) < 0) continue;  // j R i fails
      for (Mask X : F.nodes[j].bodies)
        if (F.find_body(i, X) < 0) {
          r.axioms[7] = {false,
                         "i=" + F.tokens[j] + " j=" + F.tokens[i] + " X=" + frame_set_text(F, X)};
          break;
        }
    }
  // (9) singleton consistency yields accessibility: structural under the
  // derived relation
  // (10) entailment transfers forward along R
  for (int i = 0; i < n && r.axioms[9].holds; ++i)
    for (int j = 0; j < n && r.axioms[9].holds; ++j) {
      if (F.find_body(j, bit(i)) < 0) continue;  // need i R j
      for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k) {
        Mask lost = F.nodes[i].ent[k] & ~ent_mask(F, j, F.nodes[i].bodies[k]);
        if (lost) {
          r.axioms[9] = {false, "i=" + F.tokens[i] + " j=" + F.tokens[j] +
                                    " X=" + frame_set_text(F, F.nodes[i].bodies[k]) +
                                    " token=" + F.tokens[lowest_bit(lost)]};
          break;
        }
      }
    }
  // (11) entailment at the far node is conservative
  for (int i = 0; i < n && r.axioms[10].holds; ++i)
    for (int j = 0; j < n && r.axioms[10].holds; ++j) {
      if (F.find_body(j, bit(i)) < 0) continue;
      for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k) {
        Mask lost = ent_mask(F, j, F.nodes[i].bodies[k]) & ~F.nodes[i].ent[k];
        if (lost) {
          r.axioms[10] = {false, "i=" + F.tokens[i] + " j=" + F.tokens[j] +
                                     " X=" + frame_set_text(F, F.nodes[i].bodies[k]) +
                                     " token=" + F.tokens[lowest_bit(lost)]};
          break;
        }
      }
    }
  // (12) entailed sets are consistent at an entailed witness. Downward
  // closure of con lets the maximal set stand in for all of them.
  bool down_ok = r.axioms[1].holds;
  for (int i = 0; i < n && r.axioms[11].holds; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size() && r.axioms[11].holds; ++k) {
      Mask M = F.nodes[i].ent[k];
      bool pass = false;
      if (down_ok) {
        for (Mask em = M; em && !pass; em &= em - 1)
          if (F.find_body(lowest_bit(em), M) >= 0) pass = true;
      }
      if (pass) continue;
      for (Mask Y : submasks_canonical(M)) {
        bool ok = false;
        for (Mask em = M; em && !ok; em &= em - 1)
          if (F.find_body(lowest_bit(em), Y) >= 0) ok = true;
        if (!ok) {
          r.axioms[11] = {false, cx(F, i, F.nodes[i].bodies[k]) + " Y=" + frame_set_text(F, Y)};
          break;
        }
      }
    }
  return r;
}

bool frame_global_interpolation(const Frame& F) {
  int n = F.size();
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k) {
      Mask M = F.nodes[i].ent[k];
      for (Mask Y : submasks_canonical(M)) {
        bool ok = false;
        for (int e = 0; e < n && !ok; ++e) {
          if (!has_bit(M, e)) continue;
          for (std::size_t l = 0; l < F.nodes[e].bodies.size() && !ok; ++l)
            if (subset_of(F.nodes[e].bodies[l], M) && subset_of(Y, F.nodes[e].ent[l])) ok = true;
        }
        if (!ok) return false;
      }
    }
  return true;
}

Isw isw_view(const Frame& F) {
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (int i = 0; i < F.size(); ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k) {
      con.push_back({i, F.nodes[i].bodies[k]});
      ent.push_back(F.nodes[i].ent[k]);
    }
  return make_isw(F.tokens, F.delta, std::move(con), std::move(ent));
}

Frame frame_view(const Isw& S) {
  std::vector<FrameNode> nodes(S.size());
  for (std::size_t k = 0; k < S.con.size(); ++k) {
    nodes[S.con[k].witness].bodies.push_back(S.con[k].body);
    nodes[S.con[k].witness].ent.push_back(S.ent[k]);
  }
  return make_frame(S.tokens, S.delta, std::move(nodes));
}

Isw frame_to_isw(const Frame& F) {
  ValidationReport v = validate_frame(F);
  if (!v.valid()) {
    for (std::size_t a = 0; a < v.axioms.size(); ++a)
      if (!v.axioms[a].holds)
        fail(Err::InvalidFrame,
             "axiom " + std::to_string(a + 1) + " fails at " + v.axioms[a].counterexample);
  }
  Isw S = isw_view(F);
  if (!validate_isw(S).valid())
    fail(Err::InternalCheckFailed, "valid frame produced an invalid system");
  return S;
}

Frame isw_to_frame(const Isw& S) {
  ValidationReport v = validate_isw(S);
  if (!v.valid()) {
    for (std::size_t a = 0; a < v.axioms.size(); ++a)
      if (!v.axioms[a].holds)
        fail(Err::InvalidSystem,
             "axiom " + std::to_string(a + 1) + " fails at " + v.axioms[a].counterexample);
  }
  Frame F = frame_view(S);
  if (!validate_frame(F).valid())
    fail(Err::InternalCheckFailed, "valid system produced an invalid frame");
  return F;
}

}  // namespace iswb
