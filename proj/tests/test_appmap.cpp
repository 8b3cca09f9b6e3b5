#include <doctest.h>

#include "iswb/appmap.hpp"
#include "iswb/construct.hpp"
#include "iswb/domconv.hpp"
#include "iswb/errors.hpp"
#include "support.hpp"

using namespace iswb;

namespace {

Isw chain_system() { return isw_from_poset(iswb::test::chain2()).system; }

}  // namespace

TEST_CASE("identity maps validate and act as identity on states") {
  for (const Isw& S : {terminal_system(), chain_system()}) {
    ApproxMap id = identity_map(S);
    MapValidationReport r = validate_map(id);
    CHECK(r.held() == 6);
    CHECK(r.split_checked);
    CHECK(r.split_agrees);
    for (Mask x : enumerate_states(S, StateEnum::Fast)) CHECK(apply_map(id, x) == x);
  }
}

TEST_CASE("terminal map collapses every state") {
  Isw S = chain_system();
  ApproxMap t = terminal_map(S);
  CHECK(validate_map(t).held() == 6);
  for (Mask x : enumerate_states(S, StateEnum::Fast)) CHECK(apply_map(t, x) == bit(0));
}

TEST_CASE("make_map rejects malformed relations") {
  Isw T = terminal_system();
  CHECK_THROWS_WITH_AS(make_map(T, T, {0}), doctest::Contains("rel not aligned"), IswbError);
  CHECK_THROWS_WITH_AS(make_map(T, T, {0, bit(3)}), doctest::Contains("rel out of range"),
                       IswbError);
}

TEST_CASE("empty relation fails interpolation and bottom transport") {
  Isw T = terminal_system();
  MapValidationReport r = validate_map(make_map(T, T, {0, 0}));
  CHECK(r.held() == 4);
  CHECK(!r.axioms[4].holds);
  CHECK(r.axioms[4].counterexample == "(D,{}) F={}");
  CHECK(!r.axioms[5].holds);
  CHECK(r.axioms[5].counterexample == "(delta,{}) misses delta'");
  CHECK(r.split_checked);
  CHECK(r.split_agrees);
}

TEST_CASE("validation requires valid endpoint systems") {
  Isw bad = make_isw({"a"}, 0, {{0, 0}}, {bit(0)});
  Isw T = terminal_system();
  CHECK_THROWS_WITH_AS(validate_map(make_map(bad, T, {0})),
                       doctest::Contains("source system fails validation"), IswbError);
  CHECK_THROWS_WITH_AS(validate_map(make_map(T, bad, {0, 0})),
                       doctest::Contains("target system fails validation"), IswbError);
}

TEST_CASE("target closure failure: pinned counterexample") {
  Isw S = chain_system();
  std::vector<Mask> rel = identity_map(S).rel;
  rel[0] = bit(1);  // (b,{}) relates to {t} but not to its target entailment
  MapValidationReport r = validate_map(make_map(S, S, std::move(rel)));
  CHECK(!r.axioms[0].holds);
  // first related target entry in canonical order is (t,{}), whose image
  // adds b back
  CHECK(r.axioms[0].counterexample == "(b,{}) -> (t,{}) token=b");
}

TEST_CASE("body monotonicity failure: pinned counterexample") {
  Isw S = chain_system();
  std::vector<Mask> rel = identity_map(S).rel;
  rel[5] = bit(0);  // (t,{b,t}) drops what (t,{t}) still relates
  MapValidationReport r = validate_map(make_map(S, S, std::move(rel)));
  CHECK(!r.axioms[1].holds);
  CHECK(r.axioms[1].counterexample == "(t,{t}) Y={b,t} token=t");
}

TEST_CASE("source closure failure: pinned counterexample") {
  Isw S = chain_system();
  // monotone and target-closed, but (t,{b}) relates {b,t} while the
  // entailment of (t,{}) only covers {b}
  std::vector<Mask> rel = {bit(0), bit(0), bit(0), bit(0) | bit(1), bit(0) | bit(1),
                           bit(0) | bit(1)};
  MapValidationReport r = validate_map(make_map(S, S, std::move(rel)));
  CHECK(r.axioms[0].holds);
  CHECK(r.axioms[1].holds);
  CHECK(!r.axioms[2].holds);
  CHECK(r.axioms[2].counterexample == "(t,{}) X'={b} token=t");
  CHECK(!r.axioms[4].holds);
  CHECK(r.axioms[4].counterexample == "(t,{b}) F={t}");
}

TEST_CASE("witness transfer failure: pinned counterexample") {
  Isw S = chain_system();
  std::vector<Mask> rel = {bit(0) | bit(1), bit(0) | bit(1), bit(0), bit(0), bit(0) | bit(1),
                           bit(0) | bit(1)};
  MapValidationReport r = validate_map(make_map(S, S, std::move(rel)));
  CHECK(r.axioms[0].holds);
  CHECK(r.axioms[1].holds);
  CHECK(r.axioms[2].holds);
  CHECK(!r.axioms[3].holds);
  CHECK(r.axioms[3].counterexample == "i=b j=t X={} token=t");
  CHECK(r.held() == 5);
}

TEST_CASE("composition: identities and mismatch") {
  Isw S = chain_system();
  Isw T = terminal_system();
  ApproxMap idS = identity_map(S), idT = identity_map(T);
  ApproxMap t = terminal_map(S);
  CHECK(compose(idS, t).rel == t.rel);
  CHECK(compose(t, idT).rel == t.rel);
  CHECK(compose(idS, idS).rel == idS.rel);
  CHECK_THROWS_WITH_AS(compose(idT, idS), doctest::Contains("middle systems differ"), IswbError);
}

TEST_CASE("apply rejects non-states with the violation detail") {
  ApproxMap id = identity_map(chain_system());
  CHECK_THROWS_WITH_AS(apply_map(id, bit(1)),
                       doctest::Contains("{t}: entry (t,{}) entails b outside the set"),
                       IswbError);
}

TEST_CASE("maps and monotone functions convert back and forth") {
  Isw S = chain_system();
  ApproxMap id = identity_map(S);
  StateFn f = fn_from_map(id);
  REQUIRE(f.table.size() == 2);
  CHECK(f.table[0] == std::pair<Mask, Mask>{bit(0), bit(0)});
  CHECK(f.table[1] == std::pair<Mask, Mask>{bit(0) | bit(1), bit(0) | bit(1)});
  CHECK(map_from_fn(S, S, f).rel == id.rel);

  ApproxMap t = terminal_map(S);
  CHECK(map_from_fn(S, terminal_system(), fn_from_map(t)).rel == t.rel);
}

TEST_CASE("function tables are checked before conversion") {
  Isw S = chain_system();
  Isw T = terminal_system();
  CHECK_THROWS_WITH_AS(map_from_fn(S, T, StateFn{{{bit(0), bit(0)}}}),
                       doctest::Contains("table does not cover the source states"), IswbError);
  StateFn wrong_keys{{{bit(1), bit(0)}, {bit(0) | bit(1), bit(0)}}};
  CHECK_THROWS_WITH_AS(map_from_fn(S, T, wrong_keys),
                       doctest::Contains("table keys are not the source states"), IswbError);
  StateFn bad_value{{{bit(0), 0}, {bit(0) | bit(1), bit(0)}}};
  CHECK_THROWS_WITH_AS(map_from_fn(S, T, bad_value), doctest::Contains("NotAState"), IswbError);
  StateFn not_mono{{{bit(0), bit(0) | bit(1)}, {bit(0) | bit(1), bit(0)}}};
  CHECK_THROWS_WITH_AS(map_from_fn(S, S, not_mono),
                       doctest::Contains("image of {b} is not below the image of {b,t}"),
                       IswbError);
}

TEST_CASE("monotone function enumeration: frozen counts and cap") {
  Isw S = chain_system();
  Isw T = terminal_system();
  CHECK(enumerate_monotone_fns(T, S).size() == 2);
  CHECK(enumerate_monotone_fns(S, S).size() == 3);
  CHECK(enumerate_monotone_fns(S, T).size() == 1);
  Isw M = isw_from_poset(iswb::test::bowtie()).system;
  CHECK_THROWS_WITH_AS(enumerate_monotone_fns(M, M),
                       doctest::Contains("candidate functions"), IswbError);
}

TEST_CASE("every enumerated function converts to a valid map and back") {
  Isw S = chain_system();
  for (const StateFn& f : enumerate_monotone_fns(S, S)) {
    ApproxMap H = map_from_fn(S, S, f);
    CHECK(validate_map(H).valid());
    CHECK(fn_from_map(H).table == f.table);
  }
}
