#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "iswb/classic.hpp"
#include "iswb/construct.hpp"
#include "iswb/domconv.hpp"
#include "iswb/errors.hpp"
#include "iswb/frame.hpp"
#include "iswb/io.hpp"
#include "support.hpp"

using namespace iswb;

namespace {

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / "iswb_io_scratch";
  std::filesystem::create_directories(p);
  return p;
}

void put(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("terminal system serializes to the frozen canonical text") {
  CHECK(serialize_isw(terminal_system()) ==
        "kind isw\n"
        "tokens D\n"
        "delta D\n"
        "con D :\n"
        "con D : D\n"
        "ent D : : D\n"
        "ent D : D : D\n");
}

TEST_CASE("chain poset serializes to cover edges only") {
  CHECK(serialize_poset(iswb::test::chain2()) == "kind poset\nelems b t\nle b t\n");
  FinPoset M = iswb::test::bowtie();
  std::string s = serialize_poset(M);
  CHECK(s.find("le bot a") != std::string::npos);
  CHECK(s.find("le bot t1") == std::string::npos);  // not a cover edge
  Document d = parse_document(s, "");
  REQUIRE(d.kind == DocKind::Poset);
  CHECK(d.poset == M);
}

TEST_CASE("fixture files parse to the frozen objects") {
  Document t = load_document(iswb::test::fixture("T.isw"));
  REQUIRE(t.kind == DocKind::System);
  CHECK(t.isw == terminal_system());

  Document c2 = load_document(iswb::test::fixture("C2.poset"));
  REQUIRE(c2.kind == DocKind::Poset);
  CHECK(c2.poset == iswb::test::chain2());

  Document ic2 = load_document(iswb::test::fixture("IC2.isw"));
  REQUIRE(ic2.kind == DocKind::System);
  CHECK(ic2.isw == isw_from_poset(iswb::test::chain2()).system);

  Document im = load_document(iswb::test::fixture("IM.isw"));
  CHECK(im.isw == isw_from_poset(iswb::test::bowtie()).system);

  Document cis1 = load_document(iswb::test::fixture("CIS1.cis"));
  REQUIRE(cis1.kind == DocKind::CisDoc);
  CHECK(cis1.cis == make_cis({"a"}, {0, bit(0)}, {0, bit(0)}));

  Document fr = load_document(iswb::test::fixture("FR_T.frame"));
  REQUIRE(fr.kind == DocKind::FrameDoc);
  CHECK(fr.frame == frame_view(terminal_system()));
}

TEST_CASE("comments and scrambled line order do not change the document") {
  Document d = load_document(iswb::test::fixture("COMMENTED.isw"));
  REQUIRE(d.kind == DocKind::System);
  CHECK(d.isw == terminal_system());
}

TEST_CASE("map fixture resolves endpoints relative to its own directory") {
  Document d = load_document(iswb::test::fixture("IdT.map"));
  REQUIRE(d.kind == DocKind::MapDoc);
  CHECK(d.map.source == terminal_system());
  CHECK(d.map.target == terminal_system());
  CHECK(d.map.rel == terminal_system().ent);
  CHECK(d.map_source_path == "T.isw");
  CHECK(d.map_target_path == "T.isw");
}

TEST_CASE("every kind survives a serialize and parse round trip") {
  for (const Isw& S : iswb::test::random_valid_systems(37, 10, 6)) {
    Document d = parse_document(serialize_isw(S), "");
    REQUIRE(d.kind == DocKind::System);
    CHECK(d.isw == S);
    Frame F = frame_view(S);
    Document df = parse_document(serialize_frame(F), "");
    REQUIRE(df.kind == DocKind::FrameDoc);
    CHECK(df.frame == F);
  }
  Cis C = cis_from_isw(isw_from_poset(iswb::test::chain2()).system);
  Document dc = parse_document(serialize_cis(C), "");
  REQUIRE(dc.kind == DocKind::CisDoc);
  CHECK(dc.cis == C);
  Ais A = ais_from_isw(isw_from_poset(iswb::test::chain2()).system);
  Document da = parse_document(serialize_ais(A), "");
  REQUIRE(da.kind == DocKind::AisDoc);
  CHECK(da.ais == A);
}

TEST_CASE("map documents round trip through the filesystem") {
  auto dir = scratch_dir();
  put(dir / "T.isw", serialize_isw(terminal_system()));
  ApproxMap id = identity_map(terminal_system());
  std::string text = serialize_map(id, "T.isw", "T.isw");
  CHECK(text ==
        "kind map\n"
        "source T.isw\n"
        "target T.isw\n"
        "rel D : : D\n"
        "rel D : D : D\n");
  Document d = parse_document(text, dir.string());
  REQUIRE(d.kind == DocKind::MapDoc);
  CHECK(d.map.rel == id.rel);
}

TEST_CASE("parse errors carry line numbers and reasons") {
  CHECK_THROWS_WITH_AS(parse_document("", ""), doctest::Contains("empty document"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("tokens a\n", ""),
                       doctest::Contains("first line must be 'kind <kind>'"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind zzz\n", ""),
                       doctest::Contains("unknown kind 'zzz'"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind isw\ntokens a\ndelta a\nwhat a\n", ""),
                       doctest::Contains("line 4: unknown directive 'what'"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind isw\ntokens a\ndelta a\nent a : : a\n", ""),
                       doctest::Contains("entailment on an undeclared consistency entry"),
                       IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind isw\ntokens a\ncon a :\n", ""),
                       doctest::Contains("missing delta line"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind isw\ntokens a\ndelta a\ncon a : z\n", ""),
                       doctest::Contains("line 4: unknown token 'z'"), IswbError);
  CHECK_THROWS_WITH_AS(parse_document("kind poset\nelems a\nle a b\n", ""),
                       doctest::Contains("UnknownElem"), IswbError);
  CHECK_THROWS_WITH_AS(load_document("/nonexistent/nowhere.isw"),
                       doctest::Contains("cannot read"), IswbError);
}

TEST_CASE("declared accessibility must match the derived relation") {
  std::string good =
      "kind frame\ntokens D\ndelta D\ncon@D :\ncon@D : D\nent@D : : D\nent@D : D : D\n"
      "acc D D\n";
  Document d = parse_document(good, "");
  CHECK(d.frame == frame_view(terminal_system()));
  std::string two =
      "kind frame\ntokens b t\ndelta b\n"
      "con@b :\ncon@b : b\n"
      "con@t :\ncon@t : b\ncon@t : t\ncon@t : b t\n"
      "ent@b : : b\nent@b : b : b\n"
      "ent@t : : b\nent@t : b : b\n"
      "ent@t : t : b\nent@t : t : t\nent@t : b t : b\nent@t : b t : t\n";
  Document full = parse_document(two + "acc b b\nacc b t\nacc t t\n", "");
  CHECK(full.frame == frame_view(isw_from_poset(iswb::test::chain2()).system));
  CHECK_THROWS_WITH_AS(parse_document(two + "acc b b\n", ""),
                       doctest::Contains("declared accessibility disagrees with the derived"),
                       IswbError);
  CHECK_THROWS_WITH_AS(parse_document(two + "acc b z\n", ""),
                       doctest::Contains("acc line names unknown token 'z'"), IswbError);
}

TEST_CASE("token set parsing is greedy over declared names") {
  std::vector<std::string> toks = {"t", "t1", "(b,D)"};
  CHECK(parse_token_set(toks, "{t}") == bit(0));
  CHECK(parse_token_set(toks, "{t1}") == bit(1));
  CHECK(parse_token_set(toks, "  {t,t1}  ") == (bit(0) | bit(1)));
  CHECK(parse_token_set(toks, "{(b,D),t1}") == (bit(1) | bit(2)));
  CHECK(parse_token_set(toks, "{}") == 0);
  CHECK_THROWS_WITH_AS(parse_token_set(toks, "t"), doctest::Contains("state must look like"),
                       IswbError);
  CHECK_THROWS_WITH_AS(parse_token_set(toks, "{z}"),
                       doctest::Contains("unknown token in state at 'z'"), IswbError);
}

TEST_CASE("map endpoints must be system documents") {
  auto dir = scratch_dir();
  put(dir / "P.poset", serialize_poset(iswb::test::chain2()));
  put(dir / "T2.isw", serialize_isw(terminal_system()));
  std::string text = "kind map\nsource P.poset\ntarget T2.isw\n";
  CHECK_THROWS_WITH_AS(parse_document(text, dir.string()),
                       doctest::Contains("map source must be an isw document"), IswbError);
}
