#include <doctest.h>

#include "fixtures.hpp"
#include "gpw/analysis.hpp"
#include "gpw/explore.hpp"
#include "gpw/subset_algebra.hpp"
#include "oracle.hpp"

using namespace gpw;

TEST_SUITE("analysis") {

TEST_CASE("min-semilattice facts") {
  const Structure s = fixtures::min_semilattice();
  CHECK(is_intra_regular(s));
  CHECK(is_intra_regular_legacy(s));
  CHECK(is_left_regular(s));
  CHECK(is_right_regular(s));
  CHECK(is_left_duo(s));
  CHECK(is_right_duo(s));
  const auto rep = decompose(s);
  REQUIRE(rep.partition.block_count() == 2);
  CHECK(rep.partition.blocks()[0] == s.subset({0}));
  CHECK(rep.partition.blocks()[1] == s.subset({1}));
  for (const auto& v : rep.class_verdicts) {
    CHECK(v.is_subsemigroup);
    CHECK(v.is_simple);
  }
  CHECK(rep.is_semilattice_of_simple);
  CHECK(rep.chain_condition);
  CHECK(rep.is_chain_of_simple);
  CHECK(rep.preceq_is_chain);
}

TEST_CASE("left-zero facts") {
  const Structure s = fixtures::left_zero();
  const auto rep = decompose(s);
  CHECK(rep.partition.block_count() == 1);
  CHECK(rep.class_verdicts[0].is_simple);
  CHECK(is_left_simple(s, s.full()));
  CHECK_FALSE(is_right_simple(s, s.full()));
  CHECK(is_left_duo(s));
  CHECK_FALSE(is_right_duo(s));
  CHECK(is_intra_regular(s));
  CHECK(is_left_regular(s));
}

TEST_CASE("constant-zero facts") {
  const Structure s = fixtures::constant_zero();
  const auto w = find_intra_regular_violation(s);
  REQUIRE(w.has_value());
  CHECK(w->x == 1);
  CHECK_FALSE(is_intra_regular(s));
  CHECK(find_intra_regular_legacy_violation(s) == Element{1});
  const auto rep = decompose(s);
  CHECK(rep.partition.block_count() == 1);
  CHECK_FALSE(rep.class_verdicts[0].is_simple);
  CHECK_FALSE(rep.is_semilattice_of_simple);
  CHECK_FALSE(rep.is_chain_of_simple);
}

TEST_CASE("singleton is trivially everything") {
  const Structure s = fixtures::singleton();
  CHECK(is_intra_regular(s));
  CHECK(is_left_regular(s));
  CHECK(is_right_regular(s));
  CHECK(is_simple(s, s.full()));
  CHECK(decompose(s).is_chain_of_simple);
  CHECK(maximal_simple_subsemigroups(s).size() == 1);
}

TEST_CASE("intra-regularity agrees with the naive oracle and implies the legacy form") {
  std::vector<Structure> corpus = enumerate_serial({3, 2, OrderMode::TrivialOnly});
  for (const auto& s : enumerate_serial({3, 1, OrderMode::AllPartialOrders})) corpus.push_back(s);
  for (const auto& s : corpus) {
    CHECK(is_intra_regular(s) == oracle::intra_regular(s));
    CHECK(is_intra_regular_legacy(s) == oracle::intra_regular_legacy(s));
    if (is_intra_regular(s)) CHECK(is_intra_regular_legacy(s));
    if (is_left_regular(s)) CHECK(is_left_regular_legacy(s));
    if (is_right_regular(s)) CHECK(is_right_regular_legacy(s));
  }
}

TEST_CASE("legacy and pinned intra-regularity separate with two operations") {
  const Structure s = load_gps_text(
      R"({"n":2,"gamma":["a","b"],"ops":{"a":[[0,0],[0,0]],"b":[[0,0],[0,1]]},"leq":[]})");
  CHECK(is_intra_regular_legacy(s));
  CHECK_FALSE(is_intra_regular(s));
}

TEST_CASE("relative ideals") {
  const Structure s = fixtures::min_semilattice();
  const Subset t = s.full();
  CHECK(is_relative_ideal(s, t, s.subset({0}), IdealKind::TwoSided));
  CHECK_FALSE(is_relative_ideal(s, t, s.subset({1}), IdealKind::Left));
  CHECK(relative_ideals(s, s.subset({1}), IdealKind::TwoSided).size() == 1);
  const Structure z = fixtures::constant_zero();
  CHECK_THROWS_AS(relative_ideals(z, z.subset({1}), IdealKind::Left), PreconditionError);
}

TEST_CASE("relative ideals of M are the ideals") {
  for (const auto& s : enumerate_serial({3, 1, OrderMode::AllPartialOrders}))
    for (IdealKind kind : {IdealKind::Left, IdealKind::Right, IdealKind::TwoSided})
      CHECK(relative_ideals(s, s.full(), kind) == all_ideals(s, kind));
}

TEST_CASE("cores") {
  const Structure s = fixtures::constant_zero();
  CHECK(two_sided_core(s, 1) == s.subset({0}));
  CHECK(left_core(s, 1) == s.subset({0}));
  CHECK(right_core(s, 0) == s.subset({0}));
  const Structure m = fixtures::min_semilattice();
  CHECK(two_sided_core(m, 1) == m.full());
  CHECK(left_core(m, 0) == m.subset({0}));
}

TEST_CASE("maximal simple subsemigroups") {
  const Structure s = fixtures::min_semilattice();
  const auto max = maximal_simple_subsemigroups(s);
  REQUIRE(max.size() == 2);
  CHECK(max[0] == s.subset({0}));
  CHECK(max[1] == s.subset({1}));
  const Structure z = fixtures::constant_zero();
  const auto zmax = maximal_simple_subsemigroups(z);
  REQUIRE(zmax.size() == 1);
  CHECK(zmax[0] == z.subset({0}));
  const Structure lz = fixtures::left_zero();
  CHECK(maximal_simple_subsemigroups(lz, IdealKind::Left).size() == 1);
  CHECK(maximal_simple_subsemigroups(lz, IdealKind::Right).size() == 2);
}

TEST_CASE("decompose_with reports non-congruences") {
  const Structure z = fixtures::constant_zero();
  const auto rep = decompose_with(z, Partition::from_labels(z, {0, 1}));
  CHECK_FALSE(rep.is_semilattice_congruence);
  CHECK_FALSE(rep.is_semilattice_of_simple);
  CHECK(rep.class_verdicts[0].is_simple);
  CHECK_FALSE(rep.class_verdicts[1].is_subsemigroup);
}

}  // TEST_SUITE
