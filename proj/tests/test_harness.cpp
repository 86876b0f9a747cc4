#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "gpw/campaign.hpp"
#include "gpw/harness.hpp"

using namespace gpw;

namespace {

std::map<std::string, bool> values(const TheoremVerdict& v) {
  std::map<std::string, bool> out;
  for (const auto& c : v.conditions) out[c.name] = c.value;
  return out;
}

bool all_equal(const TheoremVerdict& v, bool expected) {
  for (const auto& c : v.conditions)
    if (c.value != expected) return false;
  return true;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("theorem ids") {
  CHECK(all_theorem_ids().size() == 20);
  CHECK(to_string(TheoremId::Thm8) == "thm8");
  CHECK(parse_theorem_id("THM21") == TheoremId::Thm21);
  CHECK(parse_theorem_id("stmt1to2") == TheoremId::Stmt1to2);
  CHECK_THROWS_AS(parse_theorem_id("thm99"), InputError);
  CHECK(parse_theorem_list("all").size() == 20);
  const auto ids = parse_theorem_list("thm8,lemma3,thm8");
  REQUIRE(ids.size() == 2);
  CHECK(ids[1] == TheoremId::Lemma3);
  CHECK_THROWS_AS(parse_theorem_list("thm8,,thm10"), InputError);
}

TEST_CASE("seven conditions on the fixtures") {
  const auto m = check_theorem8(fixtures::min_semilattice());
  CHECK(m.equivalent);
  CHECK(m.conditions.size() == 8);
  CHECK(all_equal(m, true));

  const auto z = check_theorem8(fixtures::constant_zero());
  CHECK(z.equivalent);
  CHECK(all_equal(z, false));

  CHECK(all_equal(check_theorem8(fixtures::singleton()), true));
}

TEST_CASE("biconditionals on the fixtures") {
  const Structure m = fixtures::min_semilattice();
  const Structure lz = fixtures::left_zero();
  const Structure z = fixtures::constant_zero();
  const Structure one = fixtures::singleton();

  CHECK(all_equal(check_theorem10(m), true));
  CHECK(all_equal(check_theorem10(one), true));
  CHECK(check_theorem10(z).equivalent);

  CHECK(all_equal(check_theorem13(m), true));
  CHECK(all_equal(check_theorem13(lz), true));
  CHECK(all_equal(check_theorem13(z), false));

  for (const auto* s : {&m, &lz}) CHECK(all_equal(check_theorem16(*s), true));
  CHECK(all_equal(check_theorem16(z), false));
}

TEST_CASE("left-sided characterization and its mirror") {
  const auto lz = check_theorem21(fixtures::left_zero());
  CHECK(lz.equivalent);
  const auto v = values(lz);
  CHECK(v.at("left.1_left_regular_and_left_duo"));
  CHECK(v.at("left.3_N_equals_L"));
  CHECK_FALSE(v.at("right.1_left_regular_and_left_duo"));
  CHECK_FALSE(v.at("right.5_N_classes_left_simple"));

  const auto m = check_theorem21(fixtures::min_semilattice());
  CHECK(m.equivalent);
  CHECK(all_equal(m, true));

  const auto z = check_theorem21(fixtures::constant_zero());
  CHECK(z.equivalent);
  CHECK(all_equal(z, false));
}

TEST_CASE("implications record their hypothesis") {
  const auto v = check_theorem(fixtures::constant_zero(), TheoremId::Lemma11);
  CHECK(v.shape == VerdictShape::Implication);
  REQUIRE(v.hypothesis.has_value());
  CHECK_FALSE(*v.hypothesis);
  CHECK(v.equivalent);
  const auto w = check_theorem(fixtures::min_semilattice(), TheoremId::Cor19);
  CHECK(*w.hypothesis);
  CHECK(w.equivalent);
  CHECK(w.witness.is_null());
}

TEST_CASE("check_all passes on every fixture") {
  for (const char* name : {"min_semilattice", "left_zero", "constant_zero", "singleton"}) {
    CAPTURE(name);
    const auto verdicts = check_all(fixtures::load(name));
    CHECK(verdicts.size() == 20);
    CHECK(aggregate_pass(verdicts));
  }
}

TEST_CASE("a failing verdict carries its witness") {
  TheoremVerdict v{TheoremId::Thm8, VerdictShape::Equivalence, {{"a", true}, {"b", false}}};
  v.equivalent = false;
  CHECK_FALSE(aggregate_pass({v}));
}

TEST_CASE("support envelope") {
  CHECK(theorem_supported(TheoremId::Stmt1to2, 6));
  CHECK_FALSE(theorem_supported(TheoremId::Stmt1to2, 7));
  CHECK(theorem_supported(TheoremId::Thm8, 12));
  CHECK_FALSE(theorem_supported(TheoremId::Thm8, 13));
}

TEST_CASE("campaign tallies and determinism") {
  const auto specs = sizes_up_to({2, 1, OrderMode::AllPartialOrders});
  const auto ids = all_theorem_ids();
  const auto serial = run_campaign_serial(specs, ids);
  CHECK_FALSE(serial.failure.has_value());
  CHECK(serial.structures == 21);
  std::size_t tallied = 0;
  for (const auto& [key, count] : serial.predicate_tallies) tallied += count;
  CHECK(tallied == serial.structures);
  CHECK(serial.per_theorem.at(TheoremId::Thm8).checked == serial.structures);
  for (int jobs : {1, 2, 4}) {
    const auto par = run_campaign(specs, ids, jobs);
    CHECK(par.corpus_digest == serial.corpus_digest);
    CHECK(par.predicate_tallies == serial.predicate_tallies);
    CHECK(par.structures == serial.structures);
  }
}

}  // TEST_SUITE
