#include <doctest.h>

#include "iswb/construct.hpp"
#include "iswb/errors.hpp"
#include "iswb/isw.hpp"
#include "support.hpp"

using namespace iswb;

namespace {

// Two tokens a,b, delta a, every body consistent at every witness, and a
// witness-independent entailment X |-> X u {a}. Valid by hand.
Isw flat_pair_system() {
  IswBuilder b;
  b.token("a").token("b");
  b.delta = 0;
  for (int w = 0; w < 2; ++w)
    for (Mask X = 0; X < 4; ++X) b.ent(w, X, X | bit(0));
  return b.build();
}

// Three tokens, full consistency, witness-independent entailment with
// E({b}) = {a,c} while every subset of {a,c} entails only {a}: axioms 1-9
// hold and interpolation fails exactly at i=a X={b} Y={c}.
Isw interpolation_breaker() {
  IswBuilder b;
  b.token("a").token("b").token("c");
  b.delta = 0;
  for (int w = 0; w < 3; ++w)
    for (Mask X = 0; X < 8; ++X) {
      Mask e = has_bit(X, 1) ? (bit(0) | bit(2)) : bit(0);
      b.ent(w, X, e);
    }
  return b.build();
}

}  // namespace

TEST_CASE("terminal system: frozen shape and full validation") {
  Isw T = terminal_system();
  CHECK(T.tokens == std::vector<std::string>{"D"});
  CHECK(T.delta == 0);
  REQUIRE(T.con.size() == 2);
  CHECK(T.con[0] == ConEntry{0, 0});
  CHECK(T.con[1] == ConEntry{0, bit(0)});
  CHECK(T.ent == std::vector<Mask>{bit(0), bit(0)});
  ValidationReport r = validate_isw(T);
  CHECK(r.valid());
  CHECK(r.held() == 10);
  CHECK(reflexive_pairs(T) == std::vector<int>{0, 1});
  CHECK(reflexive_tokens(T) == std::vector<int>{0});
  for (Condition c : {Condition::BC, Condition::ALG, Condition::SALG, Condition::ALGP})
    CHECK(check_condition(T, c).holds);
}

TEST_CASE("make_isw canonicalizes and rejects malformed input") {
  Isw S = make_isw({"a", "b"}, 0,
                   {{1, bit(0) | bit(1)}, {0, bit(1)}, {1, 0}, {0, bit(0) | bit(1)}, {0, 0}},
                   {0, 0, 0, 0, 0});
  std::vector<ConEntry> want = {{0, 0}, {0, bit(1)}, {0, bit(0) | bit(1)}, {1, 0},
                                {1, bit(0) | bit(1)}};
  CHECK(S.con == want);
  CHECK(S.find_con(0, bit(1)) == 1);
  CHECK(S.find_con(1, bit(1)) == -1);
  CHECK(S.token_index("b") == 1);
  CHECK(S.token_index("z") == -1);

  CHECK_THROWS_WITH_AS(make_isw({}, 0, {}, {}), doctest::Contains("MalformedSystem"), IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a", "a"}, 0, {}, {}), doctest::Contains("duplicate token"),
                       IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a"}, 1, {}, {}), doctest::Contains("delta"), IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a"}, 0, {{0, 0}}, {}), doctest::Contains("not aligned"),
                       IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a"}, 0, {{2, 0}}, {0}), doctest::Contains("witness out of range"),
                       IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a"}, 0, {{0, bit(5)}}, {0}),
                       doctest::Contains("body out of range"), IswbError);
  CHECK_THROWS_WITH_AS(make_isw({"a"}, 0, {{0, 0}, {0, 0}}, {0, 0}),
                       doctest::Contains("duplicate consistency entry"), IswbError);
}

TEST_CASE("builder merges entailments into one entry") {
  IswBuilder b;
  b.token("a").token("b");
  b.delta = 0;
  b.con(0, 0);
  b.ent(0, 0, bit(0));
  b.ent(0, 0, bit(1));
  Isw S = b.build();
  REQUIRE(S.con.size() == 1);
  CHECK(S.ent[0] == (bit(0) | bit(1)));
}

TEST_CASE("flat pair system is fully valid") {
  Isw S = flat_pair_system();
  ValidationReport r = validate_isw(S);
  CHECK(r.held() == 10);
  // b alone cannot support a witness, so the only states are {a} and {a,b}
  CHECK(enumerate_states(S, StateEnum::Oracle) == std::vector<Mask>{bit(0), bit(0) | bit(1)});
}

TEST_CASE("axiom failures carry pinned first counterexamples") {
  // missing (a,{a}): axiom 1, and the entailment {a} of (a,{}) leaves con
  Isw s1 = make_isw({"a"}, 0, {{0, 0}}, {bit(0)});
  ValidationReport r1 = validate_isw(s1);
  CHECK(!r1.axioms[0].holds);
  CHECK(r1.axioms[0].counterexample == "i=a");
  CHECK(!r1.axioms[3].holds);
  CHECK(r1.axioms[3].counterexample == "i=a X={} Y={a}");

  // missing (a,{b}) below (a,{a,b}): axiom 2
  Isw s2 = make_isw({"a", "b"}, 0,
                    {{0, 0}, {0, bit(0)}, {0, bit(0) | bit(1)}, {1, 0}, {1, bit(1)}},
                    {bit(0), bit(0), bit(0), bit(0), bit(0)});
  ValidationReport r2 = validate_isw(s2);
  CHECK(!r2.axioms[1].holds);
  CHECK(r2.axioms[1].counterexample == "i=a X={a,b} Y={b}");

  // empty set entails nothing: axiom 3
  Isw s3 = make_isw({"a"}, 0, {{0, 0}, {0, bit(0)}}, {0, 0});
  ValidationReport r3 = validate_isw(s3);
  CHECK(!r3.axioms[2].holds);
  CHECK(r3.axioms[2].counterexample == "i=a");

  // larger body loses an entailment: axioms 5 and 6
  Isw s5 = flat_pair_system();
  s5.ent[s5.find_con(0, 0)] = bit(0) | bit(1);
  ValidationReport r5 = validate_isw(s5);
  CHECK(!r5.axioms[4].holds);
  CHECK(r5.axioms[4].counterexample == "i=a X={} Y={a} token=b");
  CHECK(!r5.axioms[5].holds);
  CHECK(r5.axioms[5].counterexample == "i=a X={a} Y={} token=b");
}

TEST_CASE("witness transfer failures: axioms 7, 8, 9") {
  // witness b misses the body {a,b} that witness a accepts
  IswBuilder b7;
  b7.token("a").token("b");
  b7.delta = 0;
  for (Mask X = 0; X < 4; ++X) b7.ent(0, X, X | bit(0));
  for (Mask X = 0; X < 3; ++X) b7.ent(1, X, X | bit(0));
  Isw s7 = b7.build();
  ValidationReport r7 = validate_isw(s7);
  CHECK(!r7.axioms[6].holds);
  CHECK(r7.axioms[6].counterexample == "i=a j=b X={a,b}");
  CHECK(!r7.axioms[7].holds);
  CHECK(r7.axioms[7].counterexample == "i=a j=b X={a,b} token=a");
  CHECK(r7.axioms[8].holds);

  // same bodies everywhere but witness b entails more at {b}
  IswBuilder b9;
  b9.token("a").token("b");
  b9.delta = 0;
  for (Mask X = 0; X < 4; ++X) {
    b9.ent(0, X, X == 3 ? (bit(0) | bit(1)) : bit(0));
    b9.ent(1, X, (X & bit(1)) ? (bit(0) | bit(1)) : bit(0));
  }
  Isw s9 = b9.build();
  ValidationReport r9 = validate_isw(s9);
  CHECK(!r9.axioms[7].holds);
  CHECK(r9.axioms[7].counterexample == "i=b j=a X={b} token=b");
  CHECK(!r9.axioms[8].holds);
  CHECK(r9.axioms[8].counterexample == "i=a j=b X={b} token=b");
}

TEST_CASE("interpolation failure found at the canonical witness set") {
  Isw S = interpolation_breaker();
  ValidationReport r = validate_isw(S);
  for (int a = 0; a < 9; ++a) CHECK(r.axioms[a].holds);
  CHECK(!r.axioms[9].holds);
  CHECK(r.axioms[9].counterexample == "i=a X={b} Y={c}");
  CHECK_THROWS_WITH_AS(check_condition(S, Condition::BC),
                       doctest::Contains("axiom 10 fails at i=a X={b} Y={c}"), IswbError);
}

TEST_CASE("entails and friends") {
  Isw T = terminal_system();
  CHECK(entails(T, 0, 0, 0));
  CHECK(entails_set(T, 0, bit(0)));
  CHECK(entails_pair(T, 0, 0, 0));
  Isw S = flat_pair_system();
  CHECK_THROWS_WITH_AS(entails(S, 0, bit(5), 0), doctest::Contains("NotConsistent"), IswbError);
}

TEST_CASE("entailment closure rebuilds the flat pair system from its axioms") {
  Isw S = flat_pair_system();
  // seed only the self-entailments; bottom membership, monotonicity and cut
  // must regenerate the rest
  std::vector<std::pair<ConEntry, Mask>> seed;
  for (std::size_t k = 0; k < S.con.size(); ++k) seed.push_back({S.con[k], S.con[k].body});
  Isw R = entailment_closure(S, seed);
  CHECK(R == S);
  // closure is the least fixed point: no seed gives only delta entailments
  Isw R0 = entailment_closure(S, {});
  for (std::size_t k = 0; k < S.con.size(); ++k) CHECK(R0.ent[k] == bit(0));
  CHECK_THROWS_WITH_AS(entailment_closure(S, {{ConEntry{0, bit(5)}, 0}}),
                       doctest::Contains("NotConsistent"), IswbError);
}

TEST_CASE("closure of a valid system's entailment is itself") {
  for (const Isw& S : iswb::test::random_valid_systems(41, 8, 6)) {
    std::vector<std::pair<ConEntry, Mask>> seed;
    for (std::size_t k = 0; k < S.con.size(); ++k) seed.push_back({S.con[k], S.ent[k]});
    CHECK(entailment_closure(S, seed) == S);
  }
}

TEST_CASE("condition checks on the chain image: frozen verdicts") {
  Isw S = isw_from_poset(iswb::test::chain2()).system;
  CHECK(reflexive_pairs(S) == std::vector<int>{0, 1, 4, 5});
  CHECK(reflexive_tokens(S) == std::vector<int>{0, 1});
  for (Condition c : {Condition::BC, Condition::ALG, Condition::SALG, Condition::ALGP})
    CHECK(check_condition(S, c).holds);
  ConditionReport alg = check_condition(S, Condition::ALG);
  CHECK(alg.con_refl == std::vector<int>{0, 1, 4, 5});
}

TEST_CASE("BC failure on the bowtie image: frozen counterexample") {
  Isw S = isw_from_poset(iswb::test::bowtie()).system;
  ConditionReport bc = check_condition(S, Condition::BC);
  CHECK(!bc.holds);
  CHECK(bc.counterexample == "i=t1 j=t2 X={a,b} token=t1");
  CHECK(check_condition(S, Condition::ALG).holds);
  CHECK(check_condition(S, Condition::SALG).holds);
  CHECK(check_condition(S, Condition::ALGP).holds);
}

TEST_CASE("ALG and ALG+ genuinely differ") {
  // witness-uniform system where the entry (D,{D,a}) is reflexive but the
  // token a is not: every reflexive-entry witness exists, yet no reflexive
  // token covers {a}
  IswBuilder b;
  b.token("D").token("a");
  b.delta = 0;
  for (int w = 0; w < 2; ++w)
    for (Mask X = 0; X < 4; ++X) b.ent(w, X, X == 3 ? Mask{3} : bit(0));
  Isw S = b.build();
  CHECK(validate_isw(S).held() == 10);
  CHECK(reflexive_pairs(S) == std::vector<int>{0, 1, 3, 7});
  CHECK(reflexive_tokens(S) == std::vector<int>{0});
  CHECK(check_condition(S, Condition::BC).holds);
  CHECK(check_condition(S, Condition::ALG).holds);
  CHECK(check_condition(S, Condition::SALG).holds);
  ConditionReport ap = check_condition(S, Condition::ALGP);
  CHECK(!ap.holds);
  CHECK(ap.counterexample == "i=D X={D,a} F={a}");
}

TEST_CASE("interpolation forces reflexive approximation on valid systems") {
  // axiom 10 applied to Y = E(X) yields a reflexive entry inside E(X) that
  // covers it, so ALG and SALG can only fail on invalid input
  for (const Isw& S : iswb::test::random_valid_systems(99, 12, 6)) {
    CHECK(check_condition(S, Condition::ALG).holds);
    CHECK(check_condition(S, Condition::SALG).holds);
  }
}

TEST_CASE("token caps") {
  std::vector<std::string> toks;
  for (int i = 0; i < 17; ++i) toks.push_back("t" + std::to_string(i));
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (int i = 0; i < 17; ++i) {
    con.push_back({i, 0});
    ent.push_back(0);
  }
  Isw S = make_isw(toks, 0, std::move(con), std::move(ent));
  CHECK_THROWS_WITH_AS(validate_isw(S), doctest::Contains("SizeLimitExceeded"), IswbError);
}
