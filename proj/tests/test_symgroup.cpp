#include "doctest.h"
#include "kfock/symgroup.hpp"
#include "test_util.hpp"

using namespace kft;

TEST_CASE("partitions and centralizers") {
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
  CHECK(partition_index({2, 2}) == 2);
  CHECK(z_of({2, 2}) == 8);
  CHECK(z_of({3, 1, 1}) == 6);
  CHECK(partition_union({3, 1}, {2, 1}) == Partition{3, 2, 1, 1});
  CHECK_THROWS_AS(check_partition({1, 2}), InvalidArgument);
}

TEST_CASE("character table of S_3 and orthogonality") {
  CHECK(irreducible_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(irreducible_character({2, 1}, {2, 1}) == 0);
  CHECK(irreducible_character({2, 1}, {3}) == -1);
  CHECK(irreducible_character({1, 1, 1}, {2, 1}) == -1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        CHECK(inner_product(ClassFunction::irreducible(a), ClassFunction::irreducible(b)) == (a == b ? 1 : 0));
  CHECK(ClassFunction::irreducible({3}) == ClassFunction::trivial(3));
  CHECK(ClassFunction::irreducible({1, 1, 1}) == ClassFunction::sign(3));
}

TEST_CASE("induction, restriction, cyclic trace") {
  ClassFunction ind = induce_product(ClassFunction::trivial(1), ClassFunction::trivial(1));
  CHECK(ind.at({1, 1}) == 2);
  CHECK(ind.at({2}) == 0);
  // Pieri: Ind(triv_2 x triv_1) = chi^(3) + chi^(2,1)
  CHECK(induce_product(ClassFunction::trivial(2), ClassFunction::trivial(1)) ==
        ClassFunction::irreducible({3}) + ClassFunction::irreducible({2, 1}));
  auto res = restrict(ClassFunction::irreducible({2, 1}), 2, 1);
  CHECK(res.at({Partition{2}, Partition{1}}) == 0);
  CHECK(res.at({Partition{1, 1}, Partition{1}}) == 2);
  ClassFunction tr = cyclic_trace(ClassFunction::irreducible({2, 1}), 2);
  CHECK(tr.n() == 1);
  CHECK(tr.at({1}) == 0);
  // Frobenius reciprocity on a sample
  for (const auto& lam : partitions_of(5))
    CHECK(inner_product(induce_product(ClassFunction::irreducible({2}), ClassFunction::irreducible({2, 1})),
                        ClassFunction::irreducible(lam)) >= 0);
}

TEST_CASE("characteristic map") {
  auto p = policy(6, 6, 0, 0);
  RSeries h2 = frobenius_ch(ClassFunction::trivial(2), p);
  RSeries expect = (var(nu(1), p) * var(nu(1), p) + var(nu(2), p)) * frac(1, 2);
  CHECK(h2 == expect);
  CHECK(frobenius_ch(ClassFunction::p_n(4), p) == var(nu(4), p));
  CHECK_THROWS_AS(frobenius_ch(ClassFunction::trivial(7), p), PolicyMismatch);
}

TEST_CASE("symmetric powers and double cosets") {
  ClassFunction s = sym_power_char(2, 2);
  CHECK(s.at({1, 1}) == 3);
  CHECK(s.at({2}) == 1);
  auto dc = double_cosets({2, 1}, {2, 1});
  CHECK(dc.size() == 2);
  Integer total = 0;
  for (const auto& g : dc) total += g.size;
  CHECK(total == 6);
  CHECK(composition_factorial({3, 0, 2}) == 12);
  CHECK_THROWS_AS(double_cosets({2}, {1}), InvalidArgument);
}
