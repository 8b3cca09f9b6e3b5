#include "iswb/report.hpp"

namespace iswb {

namespace {

const char* const kIswAxioms[10] = {
    "token self-consistency", "consistency downward closed", "empty set entails delta",
    "entailment preserves consistency", "entailment monotone", "entailment cut",
    "witness transfer for consistency", "witness transfer forward", "witness transfer backward",
    "entailment interpolation"};

const char* const kFrameAxioms[12] = {
    "self-membership", "downward closure", "empty set entails delta",
    "entailment preserves consistency", "monotone", "cut", "node interpolation",
    "accessibility grows consistency", "singleton accessibility", "forward transfer",
    "conservative transfer", "witness interpolation"};

const char* const kCisAxioms[6] = {"empty set consistent", "downward closure",
                                   "singletons consistent", "entailment preserves consistency",
                                   "monotone", "interpolation equivalence"};

const char* const kAisAxioms[6] = {"downward closure", "singletons consistent",
                                   "entailed token joins", "delta entailed",
                                   "entailment cut", "members entailed"};

const char* const kMapAxioms[6] = {"target entailment closure", "monotone in the body",
                                   "source entailment closure", "witness transfer",
                                   "interpolation", "delta to delta"};

std::string axiom_lines(const std::vector<AxiomVerdict>& axioms, const char* const names[]) {
  std::string out;
  for (std::size_t a = 0; a < axioms.size(); ++a) {
    out += "axiom " + std::to_string(a + 1) + " (" + names[a] + "): ";
    out += axioms[a].holds ? "holds" : "FAILS at " + axioms[a].counterexample;
    out += "\n";
  }
  return out;
}

std::string summary_line(int held, int total) {
  return std::to_string(held) + "/" + std::to_string(total) + " axioms hold\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string isw_validation_text(const Isw& S, const ValidationReport& r) {
  std::string out = "kind: isw\ntokens: " + std::to_string(S.size()) +
                    "\ncon entries: " + std::to_string(S.con.size()) + "\n";
  out += axiom_lines(r.axioms, kIswAxioms);
  out += summary_line(r.held(), 10);
  return out;
}

std::string frame_validation_text(const Frame& F, const ValidationReport& r) {
  std::size_t entries = 0;
  for (const auto& nd : F.nodes) entries += nd.bodies.size();
  std::string out = "kind: frame\ntokens: " + std::to_string(F.size()) +
                    "\ncon entries: " + std::to_string(entries) + "\n";
  std::string lines = axiom_lines(r.axioms, kFrameAxioms);
  // slot 9 is structural under the derived accessibility relation
  std::string marker = "axiom 9 (singleton accessibility): holds\n";
  auto at = lines.find(marker);
  if (at != std::string::npos)
    lines.replace(at, marker.size(), "axiom 9 (singleton accessibility): holds (structural)\n");
  out += lines;
  out += summary_line(r.held(), 12);
  return out;
}

std::string cis_validation_text(const Cis& C, const ValidationReport& r) {
  std::string out = "kind: cis\ntokens: " + std::to_string(C.size()) +
                    "\ncon entries: " + std::to_string(C.con.size()) + "\n";
  out += axiom_lines(r.axioms, kCisAxioms);
  out += summary_line(r.held(), 6);
  return out;
}

std::string ais_validation_text(const Ais& A, const ValidationReport& r) {
  std::string out = "kind: ais\ntokens: " + std::to_string(A.size()) +
                    "\ncon entries: " + std::to_string(A.con.size()) + "\n";
  std::vector<AxiomVerdict> six(r.axioms.begin(), r.axioms.begin() + 6);
  out += axiom_lines(six, kAisAxioms);
  if (r.axioms.size() > 6) {
    const AxiomVerdict& printed = r.axioms[6];
    out += "axiom 5 printed form (reverse transfer, informational): ";
    out += printed.holds ? "holds" : "FAILS at " + printed.counterexample;
    out += "\n";
  }
  int held = 0;
  for (int a = 0; a < 6; ++a)
    if (r.axioms[a].holds) ++held;
  out += summary_line(held, 6);
  return out;
}

std::string map_validation_text(const ApproxMap& H, const MapValidationReport& r) {
  std::string out = "kind: map\nsource tokens: " + std::to_string(H.source.size()) +
                    "\ntarget tokens: " + std::to_string(H.target.size()) + "\n";
  out += axiom_lines(r.axioms, kMapAxioms);
  out += "interpolation split form: ";
  out += r.split_checked ? (r.split_agrees ? "agrees" : "DISAGREES") : "not evaluated";
  out += "\n";
  out += summary_line(r.held(), 6);
  return out;
}

std::string poset_validation_text(const FinPoset& P) {
  std::string out = "kind: poset\nelems: " + std::to_string(P.size()) + "\n";
  out += poset_report_text(P, analyze(P));
  out += "order well-formed\n";
  return out;
}

std::string condition_text(const Isw& S, const ConditionReport& r) {
  const char* name = "?";
  switch (r.which) {
    case Condition::BC: name = "BC"; break;
    case Condition::ALG: name = "ALG"; break;
    case Condition::SALG: name = "SALG"; break;
    case Condition::ALGP: name = "ALG+"; break;
  }
  std::string out = std::string("condition ") + name + ": " + (r.holds ? "holds" : "FAILS") + "\n";
  if (!r.holds) out += "counterexample: " + r.counterexample + "\n";
  if (r.which == Condition::ALG) {
    out += "con_refl:";
    for (int k : r.con_refl) out += " " + con_entry_text(S, k);
    out += "\n";
  }
  return out;
}

std::string poset_report_text(const FinPoset& P, const PosetReport& r) {
  std::string out = "pointed: " + yes_no(r.pointed);
  if (r.pointed) out += " (" + P.names[r.bottom] + ")";
  out += "\nbounded-complete: " + yes_no(r.bounded_complete);
  if (r.bc_counterexample)
    out += " (" + P.names[r.bc_counterexample->first] + " " + P.names[r.bc_counterexample->second] +
           " have upper bounds but no least one)";
  out += "\nl-domain: " + yes_no(r.l_domain);
  if (r.l_counterexample)
    out += " (" + P.names[r.l_counterexample->x] + " " + P.names[r.l_counterexample->y] +
           " have no least upper bound below " + P.names[r.l_counterexample->z] + ")";
  out += "\ncompacts: " + std::to_string(r.compacts.size()) + "/" + std::to_string(P.size()) + "\n";
  return out;
}

std::string domain_text(const Isw& S) {
  StatePoset L = state_poset(S);
  std::string out = "states: " + std::to_string(L.states.size()) + "\n";
  for (const std::string& n : L.poset.names) out += n + "\n";
  out += "bottom: " + L.poset.names[L.bottom] + "\n";
  out += poset_report_text(L.poset, analyze(L.poset));
  return out;
}

std::string roundtrip_text(const FinPoset& D, const RoundtripReport& r) {
  std::string out = "element -> state\n";
  for (int a = 0; a < D.size(); ++a) {
    out += D.names[a] + " -> {";
    bool first = true;
    for (int b = 0; b < D.size(); ++b)
      if (has_bit(r.states[r.state_of[a]], b)) {
        if (!first) out += ",";
        out += D.names[b];
        first = false;
      }
    out += "}\n";
  }
  out += "order isomorphism: " + yes_no(r.iso) + "\n";
  out += "bc(domain): " + yes_no(r.bc_domain) + "\n";
  out += "BC(system): " + yes_no(r.bc_system) + "\n";
  out += std::string("bc agreement: ") + yes_no(r.bc_domain == r.bc_system) + "\n";
  out += "ALG(system): " + yes_no(r.alg_holds) + "\n";
  return out;
}

std::string dot_text(const FinPoset& P) {
  std::string out = "digraph order {\n  rankdir=BT;\n";
  for (const std::string& n : P.names) out += "  \"" + n + "\";\n";
  int n = P.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !P.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && P.le(x, z) && P.le(z, y)) cover = false;
      if (cover) out += "  \"" + P.names[x] + "\" -> \"" + P.names[y] + "\";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace iswb
