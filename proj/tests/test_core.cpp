#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gpw/explore.hpp"
#include "gpw/gps_json.hpp"
#include "gpw/subset_algebra.hpp"
#include "oracle.hpp"

using namespace gpw;

TEST_SUITE("core") {

TEST_CASE("subset operations") {
  const Structure s = fixtures::min_semilattice();
  const Subset a = s.subset({0});
  const Subset b = s.subset({1});
  CHECK((a | b) == s.full());
  CHECK((a & b).empty());
  CHECK((s.full() - a) == b);
  CHECK(a.subset_of(s.full()));
  CHECK_FALSE(s.full().subset_of(a));
  CHECK(s.full().size() == 2);
  CHECK(b.least() == 1);
  CHECK(a.with(1) == s.full());
  CHECK(s.full().elements() == std::vector<Element>{0, 1});
}

TEST_CASE("subsets of different structures do not mix") {
  const Structure s = fixtures::min_semilattice();
  const Structure t = fixtures::min_semilattice();
  CHECK_THROWS_AS((void)(s.full() | t.full()), OwnerMismatch);
  CHECK_THROWS_AS((void)downset(s, t.full()), OwnerMismatch);
}

TEST_CASE("validate collects every violation") {
  RawStructure raw = parse_gps(nlohmann::json::parse(R"({"n":2,"gamma":["g"],"ops":{"g":[[1,0],[1,0]]},"leq":[]})"));
  const auto report = validate(raw);
  CHECK_FALSE(report.ok);
  CHECK(report.violations.size() == 8);
  for (const auto& v : report.violations) CHECK(v.axiom == "associativity");
  CHECK_THROWS_AS(Structure::from_raw(raw), ValidationError);
}

TEST_CASE("validate reports order axioms and compatibility") {
  RawStructure raw;
  raw.n = 2;
  raw.gamma_names = {"g"};
  raw.tables = {{{0, 1}, {0, 1}}};
  raw.leq = {{true, true}, {true, true}};
  auto report = validate(raw);
  CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                    [](const Violation& v) { return v.axiom == "antisymmetry"; }));

  // Null semigroup except 2γ2 = 1; 2 <= 0 forces 1 <= 0.
  raw.n = 3;
  raw.tables = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
  raw.leq = {{true, false, false}, {false, true, false}, {true, false, true}};
  report = validate(raw);
  CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                    [](const Violation& v) { return v.axiom == "right_compatibility"; }));
  CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                    [](const Violation& v) { return v.axiom == "left_compatibility"; }));
  raw.leq = {{true, false, false}, {false, true, false}, {false, false, true}};
  CHECK(validate(raw).ok);
}

TEST_CASE("shape errors throw InputError") {
  RawStructure raw;
  raw.n = 0;
  CHECK_THROWS_AS(validate(raw), InputError);
  raw.n = 2;
  raw.gamma_names = {"g", "g"};
  raw.tables = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
  raw.leq = {{true, false}, {false, true}};
  CHECK_THROWS_AS(validate(raw), InputError);
  raw.gamma_names = {"g"};
  raw.tables = {{{0, 2}, {0, 0}}};
  CHECK_THROWS_AS(validate(raw), InputError);
  CHECK_THROWS_AS(load_gps_text("{"), InputError);
  CHECK_THROWS_AS(load_gps_text(R"({"n":2,"gamma":["g"],"ops":{"g":[[0,0],[0,0]]},"leq":[[0,1],[1,0]]})"),
                  InputError);
  CHECK_THROWS_AS(load_gps_text(R"({"n":2,"gamma":["g"],"ops":{"h":[[0,0],[0,0]]},"leq":[]})"), InputError);
  CHECK_THROWS_AS(fixtures::load("does_not_exist"), InputError);
}

TEST_CASE("leq is closed reflexively and transitively on load") {
  const Structure s = load_gps_text(
      R"({"n":3,"gamma":["g"],"ops":{"g":[[0,0,0],[0,0,0],[0,0,0]]},"leq":[[0,1],[1,2]]})");
  CHECK(s.leq(0, 2));
  CHECK(s.leq(1, 1));
  CHECK_FALSE(s.leq(2, 0));
}

TEST_CASE("GPS-JSON round trip and digest") {
  for (const auto& s : enumerate_serial({2, 2, OrderMode::AllPartialOrders})) {
    const auto doc = to_gps_json(s);
    const Structure back = load_gps(doc);
    CHECK(back == s);
    CHECK(structure_digest(back) == structure_digest(s));
  }
  const Structure m = fixtures::min_semilattice();
  CHECK(canonical_dump(to_gps_json(m)) == R"({"gamma":["g"],"leq":[[0,1]],"n":2,"ops":{"g":[[0,0],[0,1]]}})");
  CHECK(structure_digest(m).rfind("fnv1a64:", 0) == 0);
  CHECK(structure_digest(m).size() == 8 + 16);
  CHECK(structure_digest(m) != structure_digest(fixtures::constant_zero()));
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("opposite transposes every table") {
  const Structure s = fixtures::left_zero();
  const Structure o = s.opposite();
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) CHECK(o.mul(a, 0, b) == s.mul(b, 0, a));
  CHECK(o.opposite() == s);
}

TEST_CASE("downset and products agree with the naive oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Structure s = random_structure(4, 2, seed);
    for (Bits a = 0; a < 16; ++a) {
      const Subset sa = s.from_bits(a);
      CHECK(oracle::to_set(downset(s, sa)) == oracle::down(s, oracle::to_set(sa)));
      for (Bits b = 0; b < 16; b += 3) {
        const Subset sb = s.from_bits(b);
        CHECK(oracle::to_set(gamma_product(s, sa, sb)) ==
              oracle::product(s, oracle::to_set(sa), oracle::to_set(sb)));
      }
    }
  }
}

TEST_CASE("word products") {
  const Structure s = fixtures::min_semilattice();
  const Op g = s.op("g");
  const std::vector<WordItem> w{Element{1}, g, Element{1}, g, Element{0}};
  CHECK(word_product(s, w) == 0);
  const std::vector<WordItem> single{Element{1}};
  CHECK(word_product(s, single) == 1);
  const std::vector<WordItem> bad{Element{1}, g};
  CHECK_THROWS_AS(word_product(s, bad), InputError);
  CHECK_THROWS_AS(s.op("nope"), InputError);
}

TEST_CASE("subsemigroups") {
  const Structure s = fixtures::min_semilattice();
  CHECK(is_subsemigroup(s, s.subset({0})));
  CHECK(is_subsemigroup(s, s.subset({1})));
  CHECK_FALSE(is_subsemigroup(s, s.empty_subset()));
  const Structure z = fixtures::constant_zero();
  CHECK_FALSE(is_subsemigroup(z, z.subset({1})));
}

}  // TEST_SUITE
