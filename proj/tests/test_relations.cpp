#include <doctest.h>

#include "fixtures.hpp"
#include "gpw/explore.hpp"
#include "gpw/ideals.hpp"
#include "gpw/relations.hpp"
#include "oracle.hpp"

using namespace gpw;

namespace {

// Naive congruence test over labels.
bool naive_congruence(const Structure& s, const Partition& p) {
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      if (!p.same(a, b)) continue;
      for (Element c = 0; c < s.size(); ++c)
        for (std::size_t g = 0; g < s.gamma_count(); ++g)
          if (!p.same(s.mul(a, g, c), s.mul(b, g, c)) || !p.same(s.mul(c, g, a), s.mul(c, g, b))) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("partition blocks are ordered by least element") {
  const Structure s = random_structure(4, 1, 1);
  const Partition p = Partition::from_labels(s, {7, 3, 7, 3});
  REQUIRE(p.block_count() == 2);
  CHECK(p.blocks()[0] == s.subset({0, 2}));
  CHECK(p.blocks()[1] == s.subset({1, 3}));
  CHECK(p.class_of(3) == 1);
  CHECK(p.same(0, 2));
  const Partition fine = Partition::from_labels(s, {0, 1, 2, 3});
  CHECK(fine.refines(p));
  CHECK_FALSE(p.refines(fine));
}

TEST_CASE("partition enumeration yields the Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
  for (std::size_t n = 1; n <= 5; ++n) {
    const Structure s = random_structure(n, 1, n);
    std::size_t count = 0;
    for_each_partition(s, [&](const Partition&) {
      ++count;
      return true;
    });
    CHECK(count == bell[n]);
  }
  const Structure big = random_structure(6, 1, 0);
  CHECK_THROWS_AS(for_each_partition(big, [](const Partition&) { return true; }), PreconditionError);
}

TEST_CASE("fixture partitions") {
  const Structure m = fixtures::min_semilattice();
  const Partition n = relation_partition(m, Relation::N);
  REQUIRE(n.block_count() == 2);
  CHECK(n.blocks()[0] == m.subset({0}));
  CHECK(relation_partition(m, Relation::I) == n);

  const Structure lz = fixtures::left_zero();
  CHECK(relation_partition(lz, Relation::N).block_count() == 1);
  CHECK(relation_partition(lz, Relation::L).block_count() == 1);
  CHECK(relation_partition(lz, Relation::R).block_count() == 2);

  const Structure z = fixtures::constant_zero();
  CHECK(relation_partition(z, Relation::N).block_count() == 1);
  CHECK(relation_partition(z, Relation::I).block_count() == 2);
}

TEST_CASE("relation partitions agree with the naive oracle") {
  for (const auto& s : enumerate_serial({3, 1, OrderMode::AllPartialOrders})) {
    const std::size_t n = s.size();
    const auto key_n = oracle::classes(n, [&](Element x) { return oracle::filter_of(s, x); });
    const auto key_i =
        oracle::classes(n, [&](Element x) { return oracle::ideal_of(s, x, IdealKind::TwoSided); });
    const auto key_l = oracle::classes(n, [&](Element x) { return oracle::ideal_of(s, x, IdealKind::Left); });
    CHECK(relation_partition(s, Relation::N) == Partition::from_labels(s, key_n));
    CHECK(relation_partition(s, Relation::I) == Partition::from_labels(s, key_i));
    CHECK(relation_partition(s, Relation::L) == Partition::from_labels(s, key_l));
  }
}

TEST_CASE("congruence checks agree with the naive test") {
  for (const auto& s : enumerate_serial({3, 1, OrderMode::TrivialOnly})) {
    for_each_partition(s, [&](const Partition& p) {
      CHECK(is_congruence(s, p) == naive_congruence(s, p));
      if (is_semilattice_congruence(s, p)) CHECK(is_congruence(s, p));
      if (is_complete_semilattice_congruence(s, p)) CHECK(is_semilattice_congruence(s, p));
      return true;
    });
  }
}

TEST_CASE("N is a complete semilattice congruence") {
  for (const auto& s : enumerate_serial({2, 2, OrderMode::AllPartialOrders}))
    CHECK(is_complete_semilattice_congruence(s, relation_partition(s, Relation::N)));
}

TEST_CASE("the identity partition is a semilattice congruence only on semilattices") {
  const Structure z = fixtures::constant_zero();
  const Partition id = Partition::from_labels(z, {0, 1});
  CHECK(is_congruence(z, id));
  CHECK_FALSE(is_semilattice_congruence(z, id));
  const Structure m = fixtures::min_semilattice();
  CHECK(is_complete_semilattice_congruence(m, Partition::from_labels(m, {0, 1})));
}

}  // TEST_SUITE
