#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitquant/catalog.hpp"
#include "orbitquant/characters.hpp"
#include "orbitquant/errors.hpp"
#include "orbitquant/partition.hpp"
#include "orbitquant/subgroup.hpp"
#include "orbitquant/virtual_character.hpp"

#include <map>
#include <vector>

using namespace orbitquant;

namespace {

Partition C(std::vector<int> parts) { return Partition::make(std::move(parts), PartitionKind::C); }

VirtualCharacter from_table(int rank, const std::map<std::vector<int>, int>& table) {
  VirtualCharacter chi(rank);
  for (const auto& [coords, c] : table) chi.add_term(Weight::integral(coords), c);
  return chi;
}

VirtualCharacter component_sum(const Partition& p, unsigned element, const Catalog& cat) {
  const CellCatalogEntry entry = cat.lookup(p);
  const SubgroupSpec& spec = entry.spec_for(element);
  return r_x(spec.arrangement(), spec);
}

}  // namespace

// Hand-expanded alternating sums for the rank-2 orbit (2,2):
// the identity component runs over D1xC1 arranging (0,1), the twisted
// one over D2 arranging (1,0).
TEST_CASE("rank-2 worked example") {
  Catalog cat = Catalog::builtin();
  Partition orbit = C({2, 2});

  VirtualCharacter re = component_sum(orbit, 0, cat);
  CHECK(re == from_table(2, {{{0, 0}, 1}, {{2, 0}, -1}}));

  VirtualCharacter rs = component_sum(orbit, 1, cat);
  CHECK(rs == from_table(2, {{{0, 0}, 1}, {{1, 1}, -2}, {{2, 0}, 1}}));

  auto [xplus, xminus] = unipotent_pair(orbit, cat);
  CHECK(xplus == from_table(2, {{{0, 0}, 1}, {{1, 1}, -1}}));
  CHECK(xminus == from_table(2, {{{1, 1}, 1}, {{2, 0}, -1}}));
  CHECK(xplus + xminus == re);
}

// Same data for (2,2,1,1) in rank 3: e-component D1xC2 on (0,2,1),
// s-component D3xC0 on (2,1,0).  Tables expanded by hand, 16 and 24
// group elements respectively.
TEST_CASE("rank-3 worked example") {
  Catalog cat = Catalog::builtin();
  Partition orbit = C({2, 2, 1, 1});

  VirtualCharacter re = component_sum(orbit, 0, cat);
  CHECK(re == from_table(3, {{{0, 0, 0}, 1},
                             {{2, 0, 0}, -1},
                             {{4, 0, 0}, -1},
                             {{4, 2, 0}, 1},
                             {{1, 1, 0}, -1},
                             {{3, 1, 0}, 2},
                             {{3, 3, 0}, -1}}));

  VirtualCharacter rs = component_sum(orbit, 1, cat);
  CHECK(rs == from_table(3, {{{0, 0, 0}, 1},
                             {{2, 0, 0}, 1},
                             {{4, 0, 0}, 1},
                             {{4, 2, 0}, 1},
                             {{1, 1, 0}, -3},
                             {{3, 3, 0}, -1},
                             {{3, 1, 0}, -2},
                             {{4, 1, 1}, -2},
                             {{2, 1, 1}, 4},
                             {{3, 2, 1}, 4},
                             {{2, 2, 0}, -2},
                             {{2, 2, 2}, -2}}));

  auto [xplus, xminus] = unipotent_pair(orbit, cat);
  CHECK(xplus == from_table(3, {{{0, 0, 0}, 1},
                                {{4, 2, 0}, 1},
                                {{1, 1, 0}, -2},
                                {{3, 3, 0}, -1},
                                {{4, 1, 1}, -1},
                                {{2, 1, 1}, 2},
                                {{3, 2, 1}, 2},
                                {{2, 2, 0}, -1},
                                {{2, 2, 2}, -1}}));
  CHECK(xminus == from_table(3, {{{2, 0, 0}, -1},
                                 {{4, 0, 0}, -1},
                                 {{1, 1, 0}, 1},
                                 {{3, 1, 0}, 2},
                                 {{4, 1, 1}, 1},
                                 {{2, 1, 1}, -2},
                                 {{3, 2, 1}, -2},
                                 {{2, 2, 0}, 1},
                                 {{2, 2, 2}, 1}}));
  CHECK(xplus + xminus == re);
}

TEST_CASE("r_x rejects rank mismatches") {
  SubgroupSpec spec = SubgroupSpec::parse("D1xC2");
  CHECK_THROWS_AS(r_x(Weight::integral({1, 0}), spec), Error);
}

TEST_CASE("x_pi needs every component spec") {
  Catalog cat = Catalog::builtin();
  const CellCatalogEntry entry = cat.lookup(C({4, 4, 3, 3, 2, 2, 1, 1}));
  for (unsigned pi : {0u, 1u, 2u, 3u}) {
    try {
      x_pi(entry, pi);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MissingSpec);
    }
  }
  try {
    x_pi(entry, 4);  // out of range for abar_rank 2
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("unipotent pair rejects orbits outside the two-row family") {
  Catalog cat = Catalog::builtin();
  try {
    unipotent_pair(C({4, 4, 3, 3, 2, 2, 1, 1}), cat);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongFamily);
  }
}

TEST_CASE("pair sum equals the identity component sum across the family") {
  Catalog cat = Catalog::builtin();
  for (int p = 1; p <= 2; ++p)
    for (int q = 0; q <= 5 - 2 * p; ++q) {
      Partition fam = family_partition(p, q);
      auto [xplus, xminus] = unipotent_pair(fam, cat);
      CHECK(xplus + xminus == component_sum(fam, 0, cat));
      CHECK(xplus.has_integer_coefficients());
      CHECK(xminus.has_integer_coefficients());
    }
}

TEST_CASE("mcgovern character equals the worked example and rejects B partitions") {
  CHECK(mcgovern_character(C({2, 2})) == from_table(2, {{{0, 0}, 1}, {{1, 1}, -1}}));
  try {
    mcgovern_character(Partition::make({5, 1, 1}, PartitionKind::B));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KindMismatch);
  }
}

TEST_CASE("principal orbit product is the bare induction of zero") {
  for (int n = 1; n <= 4; ++n) {
    VirtualCharacter chi = mcgovern_character(C({2 * n}));
    VirtualCharacter expected(n);
    expected.add_term(Weight::zero(n), 1);
    CHECK(chi == expected);
  }
}

TEST_CASE("minimal orbit product matches the rank denominator sum") {
  for (int n = 1; n <= 3; ++n) {
    VirtualCharacter mcg = mcgovern_character(C(std::vector<int>(2 * n, 1)));
    SubgroupSpec cn({{FactorKind::C, n}});
    CHECK(mcg == r_x(cn.arrangement(), cn));
  }
}

TEST_CASE("strongly Richardson identity: plus character equals the symmetric-group sum") {
  Catalog cat = Catalog::builtin();
  for (int p : {1, 2}) {
    VirtualCharacter xplus = unipotent_pair(family_partition(p, 0), cat).first;
    SubgroupSpec aspec({{FactorKind::A, 2 * p}});
    CHECK(xplus == r_x(aspec.arrangement(), aspec));
  }
}

TEST_CASE("threaded sums equal the single-threaded sums") {
  Catalog cat = Catalog::builtin();
  Partition fam = family_partition(1, 2);
  const CellCatalogEntry entry = cat.lookup(fam);
  const SubgroupSpec& spec = entry.spec_for(1);
  CHECK(r_x(spec.arrangement(), spec, 4) == r_x(spec.arrangement(), spec, 1));
  CHECK(x_pi(entry, 0, 3) == x_pi(entry, 0, 1));
}

TEST_CASE("virtual character algebra") {
  VirtualCharacter a(2);
  a.add_term(Weight::integral({1, 0}), Rational(1, 2));
  a.add_term(Weight::integral({1, 0}), Rational(1, 2));
  CHECK(a.coeff(Weight::integral({1, 0})) == 1);
  CHECK(a.has_integer_coefficients());

  a.add_term(Weight::integral({1, 0}), -1);
  CHECK(a.term_count() == 0);  // exact cancellation erases the term

  VirtualCharacter b(2);
  b.add_term(Weight::integral({2, 1}), 3);
  CHECK(b.scaled(0).term_count() == 0);
  CHECK((b - b).term_count() == 0);
  CHECK((b + b.scaled(-1)).term_count() == 0);
  CHECK_THROWS_AS(b.add_term(Weight::integral({1, 2}), 1), Error);   // not dominant
  CHECK_THROWS_AS(b.add_term(Weight::integral({1, 0, 0}), 1), Error);  // wrong rank
}

TEST_CASE("serialization order is norm-descending then lexicographic") {
  VirtualCharacter chi(2);
  chi.add_term(Weight::integral({2, 0}), 1);   // norm 4
  chi.add_term(Weight::integral({1, 1}), 1);   // norm 2
  chi.add_term(Weight::integral({2, 1}), 1);   // norm 5
  chi.add_term(Weight::integral({0, 0}), 1);   // norm 0
  auto terms = chi.sorted_terms();
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].first == Weight::integral({2, 1}));
  CHECK(terms[1].first == Weight::integral({2, 0}));
  CHECK(terms[2].first == Weight::integral({1, 1}));
  CHECK(terms[3].first == Weight::integral({0, 0}));

  VirtualCharacter tie(3);
  tie.add_term(Weight::integral({4, 1, 1}), 1);  // norm 18
  tie.add_term(Weight::integral({3, 3, 0}), 1);  // norm 18: tie broken lexicographically
  auto tied = tie.sorted_terms();
  CHECK(tied[0].first == Weight::integral({3, 3, 0}));
  CHECK(tied[1].first == Weight::integral({4, 1, 1}));
}
