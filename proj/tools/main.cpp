#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iswb/appmap.hpp"
#include "iswb/classic.hpp"
#include "iswb/construct.hpp"
#include "iswb/domconv.hpp"
#include "iswb/errors.hpp"
#include "iswb/frame.hpp"
#include "iswb/io.hpp"
#include "iswb/isw.hpp"
#include "iswb/poset.hpp"
#include "iswb/report.hpp"
#include "iswb/states.hpp"

using namespace iswb;

namespace {

// 0 success/holds, 1 property fails, 2 input error, 3 size limit
int exit_for(const IswbError& e) {
  switch (e.code) {
    case Err::SizeLimitExceeded:
      return 3;
    case Err::BcViolated:
    case Err::AlgPlusViolated:
    case Err::NotLDomain:
      return 1;
    default:
      return 2;
  }
}

const Isw& as_isw(const Document& d, const char* verb) {
  if (d.kind != DocKind::System)
    fail(Err::KindMismatch,
         std::string(verb) + " wants an isw document, got " + doc_kind_name(d.kind));
  return d.isw;
}

FinPoset order_of(const Document& d, const char* verb) {
  if (d.kind == DocKind::Poset) return d.poset;
  if (d.kind == DocKind::System) return state_poset(d.isw).poset;
  fail(Err::KindMismatch, std::string(verb) + " wants a poset or isw document, got " +
                              std::string(doc_kind_name(d.kind)));
}

int cmd_validate(const std::string& path, bool strict) {
  Document d = load_document(path);
  if (strict && d.kind != DocKind::AisDoc)
    fail(Err::KindMismatch, "--strict-printed-axioms applies to ais documents only");
  switch (d.kind) {
    case DocKind::Poset:
      std::cout << poset_validation_text(d.poset);
      return 0;
    case DocKind::System: {
      ValidationReport r = validate_isw(d.isw);
      std::cout << isw_validation_text(d.isw, r);
      return r.valid() ? 0 : 1;
    }
    case DocKind::FrameDoc: {
      ValidationReport r = validate_frame(d.frame);
      std::cout << frame_validation_text(d.frame, r);
      return r.valid() ? 0 : 1;
    }
    case DocKind::CisDoc: {
      ValidationReport r = validate_cis(d.cis);
      std::cout << cis_validation_text(d.cis, r);
      return r.valid() ? 0 : 1;
    }
    case DocKind::AisDoc: {
      ValidationReport r = validate_ais(d.ais, strict);
      std::cout << ais_validation_text(d.ais, r);
      // the strict slot is informational: only the six counted axioms decide
      for (int a = 0; a < 6; ++a)
        if (!r.axioms[a].holds) return 1;
      return 0;
    }
    case DocKind::MapDoc: {
      MapValidationReport r = validate_map(d.map);
      std::cout << map_validation_text(d.map, r);
      return r.valid() ? 0 : 1;
    }
  }
  return 2;
}

int cmd_check(const std::string& path, Condition which) {
  Document d = load_document(path);
  ConditionReport r = check_condition(as_isw(d, "check"), which);
  std::cout << condition_text(d.isw, r);
  return r.holds ? 0 : 1;
}

int cmd_states(const std::string& path, bool oracle) {
  Document d = load_document(path);
  const Isw& S = as_isw(d, "states");
  for (Mask x : enumerate_states(S, oracle ? StateEnum::Oracle : StateEnum::Fast))
    std::cout << token_set_text(S, x) << "\n";
  return 0;
}

int cmd_domain(const std::string& path) {
  Document d = load_document(path);
  std::cout << domain_text(as_isw(d, "domain"));
  return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
  FinPoset P = order_of(load_document(path1), "iso");
  FinPoset Q = order_of(load_document(path2), "iso");
  std::optional<std::vector<int>> f = find_iso(P, Q);
  if (!f) {
    std::cout << "none\n";
    return 1;
  }
  for (int x = 0; x < P.size(); ++x)
    std::cout << P.names[x] << " -> " << Q.names[(*f)[x]] << "\n";
  return 0;
}

int cmd_convert(const std::string& path, const std::string& to) {
  Document d = load_document(path);
  auto unsupported = [&]() -> std::string {
    fail(Err::KindMismatch,
         std::string("no conversion from ") + doc_kind_name(d.kind) + " to " + to);
  };
  std::string out;
  if (to == "isw") {
    switch (d.kind) {
      case DocKind::Poset: out = serialize_isw(isw_from_poset(d.poset).system); break;
      case DocKind::System: out = serialize_isw(d.isw); break;
      case DocKind::FrameDoc: out = serialize_isw(frame_to_isw(d.frame)); break;
      case DocKind::CisDoc: out = serialize_isw(isw_from_cis(d.cis)); break;
      case DocKind::AisDoc: out = serialize_isw(isw_from_ais(d.ais)); break;
      default: out = unsupported();
    }
  } else if (to == "frame") {
    switch (d.kind) {
      case DocKind::System: out = serialize_frame(isw_to_frame(d.isw)); break;
      case DocKind::FrameDoc: out = serialize_frame(d.frame); break;
      default: out = unsupported();
    }
  } else if (to == "cis") {
    switch (d.kind) {
      case DocKind::System: out = serialize_cis(cis_from_isw(d.isw)); break;
      case DocKind::CisDoc: out = serialize_cis(d.cis); break;
      default: out = unsupported();
    }
  } else if (to == "ais") {
    switch (d.kind) {
      case DocKind::System: out = serialize_ais(ais_from_isw(d.isw)); break;
      case DocKind::AisDoc: out = serialize_ais(d.ais); break;
      default: out = unsupported();
    }
  } else {
    fail(Err::KindMismatch, "unknown conversion target '" + to + "'");
  }
  std::cout << out;
  return 0;
}

int cmd_product(const std::string& path1, const std::string& path2) {
  Document a = load_document(path1);
  Document b = load_document(path2);
  ProductSystem P = product_system(as_isw(a, "product"), as_isw(b, "product"));
  std::cout << serialize_isw(P.product);
  return 0;
}

int cmd_compose(const std::string& path1, const std::string& path2) {
  Document h = load_document(path1);
  Document g = load_document(path2);
  if (h.kind != DocKind::MapDoc || g.kind != DocKind::MapDoc)
    fail(Err::KindMismatch, "compose wants two map documents");
  ApproxMap C = compose(h.map, g.map);
  std::cout << serialize_map(C, h.map_source_path, g.map_target_path);
  return 0;
}

int cmd_apply(const std::string& path, const std::string& state_text) {
  Document d = load_document(path);
  if (d.kind != DocKind::MapDoc) fail(Err::KindMismatch, "apply wants a map document");
  Mask x = parse_token_set(d.map.source.tokens, state_text);
  std::cout << token_set_text(d.map.target, apply_map(d.map, x)) << "\n";
  return 0;
}

int cmd_roundtrip(const std::string& path) {
  Document d = load_document(path);
  if (d.kind != DocKind::Poset) fail(Err::KindMismatch, "roundtrip wants a poset document");
  std::cout << roundtrip_text(d.poset, roundtrip_check(d.poset));
  return 0;
}

int cmd_export_dot(const std::string& path) {
  std::cout << dot_text(order_of(load_document(path), "export-dot"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite workbench for information systems with witnesses"};
  app.require_subcommand(1);

  std::string file, file2, to, state_text;
  bool strict = false, oracle = false;
  bool want_bc = false, want_alg = false, want_salg = false, want_algplus = false;

  CLI::App* validate = app.add_subcommand("validate", "axiom report for any document");
  validate->add_option("file", file)->required();
  validate->add_flag("--strict-printed-axioms", strict,
                     "also report the printed transitivity form (ais only)");

  CLI::App* check = app.add_subcommand("check", "extra conditions on a valid system");
  check->add_option("file", file)->required();
  check->add_flag("--bc", want_bc, "witness independence of entailment");
  check->add_flag("--alg", want_alg, "interpolation through reflexive entries");
  check->add_flag("--salg", want_salg, "strong algebraicity");
  check->add_flag("--algplus", want_algplus, "interpolation through reflexive tokens");

  CLI::App* states = app.add_subcommand("states", "canonical state listing");
  states->add_option("file", file)->required();
  states->add_flag("--oracle", oracle, "filter all token subsets instead of the fast path");

  CLI::App* domain = app.add_subcommand("domain", "state poset and its order analysis");
  domain->add_option("file", file)->required();

  CLI::App* iso = app.add_subcommand("iso", "order isomorphism between two orders");
  iso->add_option("file", file)->required();
  iso->add_option("file2", file2)->required();

  CLI::App* convert = app.add_subcommand("convert", "rewrite between the system presentations");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to, "isw, frame, cis or ais")->required();

  CLI::App* product = app.add_subcommand("product", "product of two systems");
  product->add_option("file", file)->required();
  product->add_option("file2", file2)->required();

  CLI::App* compose_cmd = app.add_subcommand("compose", "diagrammatic composite of two mappings");
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("file2", file2)->required();

  CLI::App* apply = app.add_subcommand("apply", "image of a state under a mapping");
  apply->add_option("file", file)->required();
  apply->add_option("--state", state_text, "state as {a,b}")->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "domain to system to state order and back");
  roundtrip->add_option("file", file)->required();

  CLI::App* export_dot = app.add_subcommand("export-dot", "order diagram as graph text");
  export_dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, strict);
    if (check->parsed()) {
      int picked = want_bc + want_alg + want_salg + want_algplus;
      if (picked != 1) {
        std::cerr << "error: choose exactly one of --bc --alg --salg --algplus\n";
        return 2;
      }
      Condition which = want_bc    ? Condition::BC
                        : want_alg ? Condition::ALG
                        : want_salg ? Condition::SALG
                                    : Condition::ALGP;
      return cmd_check(file, which);
    }
    if (states->parsed()) return cmd_states(file, oracle);
    if (domain->parsed()) return cmd_domain(file);
    if (iso->parsed()) return cmd_iso(file, file2);
    if (convert->parsed()) return cmd_convert(file, to);
    if (product->parsed()) return cmd_product(file, file2);
    if (compose_cmd->parsed()) return cmd_compose(file, file2);
    if (apply->parsed()) return cmd_apply(file, state_text);
    if (roundtrip->parsed()) return cmd_roundtrip(file);
    if (export_dot->parsed()) return cmd_export_dot(file);
  } catch (const IswbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return 2;
}
