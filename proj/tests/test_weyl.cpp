#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitquant/errors.hpp"
#include "orbitquant/signed_perm.hpp"
#include "orbitquant/subgroup.hpp"
#include "orbitquant/weight.hpp"

#include "oracles.hpp"

#include <random>
#include <set>

using namespace orbitquant;

namespace {

SignedPermutation random_element(std::mt19937& rng, int rank) {
  std::vector<int> images(rank);
  for (int i = 0; i < rank; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int& im : images)
    if (coin(rng)) im = -im;
  return SignedPermutation(images);
}

}  // namespace

TEST_CASE("window action and det_sign") {
  SignedPermutation w({-2, -1});
  CHECK(w.act(Weight::integral({1, 0})) == Weight::integral({0, -1}));
  CHECK(w.act(Weight::integral({3, 5})) == Weight::integral({-5, -3}));
  CHECK(w.det_sign() == -1);  // transposition x two sign flips

  CHECK(SignedPermutation({1, 2, 3}).det_sign() == 1);
  CHECK(SignedPermutation({2, 1, 3}).det_sign() == -1);
  CHECK(SignedPermutation({-1, 2, 3}).det_sign() == -1);
  CHECK(SignedPermutation({-1, -2, -3}).det_sign() == -1);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), Error);
  CHECK_THROWS_AS(SignedPermutation({3, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), Error);
}

TEST_CASE("compose is the action composition and det is multiplicative") {
  std::mt19937 rng(424242);
  Weight v = Weight::integral({3, 1, 4, 1, 5});
  for (int trial = 0; trial < 300; ++trial) {
    SignedPermutation u = random_element(rng, 5);
    SignedPermutation w = random_element(rng, 5);
    SignedPermutation uw = compose(u, w);
    CHECK(uw.act(v) == u.act(w.act(v)));
    CHECK(uw.det_sign() == u.det_sign() * w.det_sign());
  }
}

TEST_CASE("length counts flipped positive roots and matches det parity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    SignedPermutation w = random_element(rng, 4);
    int lc = length_c(w);
    CHECK(w.det_sign() == (lc % 2 == 0 ? 1 : -1));
  }
  // longest elements have full length
  for (int n = 1; n <= 5; ++n) {
    SubgroupSpec cn({{FactorKind::C, n}});
    CHECK(length_c(cn.longest_element()) == n * n);
  }
  for (int n = 2; n <= 5; ++n) {
    SubgroupSpec dn({{FactorKind::D, n}});
    CHECK(length_d(dn.longest_element()) == n * (n - 1));
  }
  CHECK(length_c(SignedPermutation::identity(4)) == 0);
}

TEST_CASE("subgroup enumeration hits every element exactly once") {
  auto distinct_count = [](const SubgroupSpec& spec) {
    std::set<std::vector<int>> seen;
    std::size_t visits = 0;
    for_each_element(spec, [&](const SignedPermutation& w) {
      ++visits;
      seen.insert(w.images());
    });
    CHECK(visits == seen.size());
    return seen.size();
  };
  CHECK(distinct_count(SubgroupSpec({{FactorKind::C, 2}})) == 8);
  CHECK(distinct_count(SubgroupSpec({{FactorKind::D, 3}})) == 24);
  CHECK(distinct_count(SubgroupSpec({{FactorKind::A, 3}})) == 6);
  CHECK(distinct_count(SubgroupSpec({{FactorKind::D, 1}, {FactorKind::C, 2}})) == 8);
  CHECK(distinct_count(SubgroupSpec({{FactorKind::D, 2}, {FactorKind::C, 0}})) == 4);

  SubgroupSpec big = SubgroupSpec::parse("C4xD3xC2xD1");
  CHECK(big.order() == 73728);
  std::size_t visits = 0;
  for_each_element(big, [&](const SignedPermutation&) { ++visits; });
  CHECK(visits == 73728);
}

TEST_CASE("range enumeration splits the group without overlap") {
  SubgroupSpec spec = SubgroupSpec::parse("D2xC2");
  unsigned long long order = spec.order().convert_to<unsigned long long>();
  CHECK(order == 32);
  std::set<std::vector<int>> seen;
  for (unsigned long long b : {0ull, 5ull, 11ull}) {
    unsigned long long e = b == 0 ? 5 : (b == 5 ? 11 : order);
    for_each_element_range(spec, b, e, [&](const SignedPermutation& w) {
      CHECK(seen.insert(w.images()).second);
    });
  }
  CHECK(seen.size() == order);
}

TEST_CASE("orders") {
  CHECK(SubgroupSpec({{FactorKind::C, 4}}).order() == 384);
  CHECK(SubgroupSpec({{FactorKind::D, 4}}).order() == 192);
  CHECK(SubgroupSpec({{FactorKind::A, 4}}).order() == 24);
  CHECK(SubgroupSpec({{FactorKind::C, 0}}).order() == 1);
  CHECK(SubgroupSpec::parse("D3xC2").order() == 24 * 8);
}

TEST_CASE("arrangements") {
  CHECK(SubgroupSpec({{FactorKind::C, 3}}).arrangement() == Weight::integral({3, 2, 1}));
  CHECK(SubgroupSpec({{FactorKind::D, 3}}).arrangement() == Weight::integral({2, 1, 0}));
  CHECK(SubgroupSpec({{FactorKind::D, 1}, {FactorKind::C, 2}}).arrangement() ==
        Weight::integral({0, 2, 1}));
  CHECK(SubgroupSpec({{FactorKind::A, 2}}).arrangement() == Weight::halves({1, -1}));
  CHECK(SubgroupSpec({{FactorKind::A, 3}}).arrangement() == Weight::integral({1, 0, -1}));
  CHECK(SubgroupSpec::parse("C4xD3xC2xD1").arrangement() ==
        Weight::integral({4, 3, 2, 1, 2, 1, 0, 2, 1, 0}));
}

TEST_CASE("longest elements negate block arrangements") {
  for (const char* text : {"C3", "D2", "D3", "D1xC2", "D3xC0", "C4xD3xC2xD1", "D2xC3"}) {
    SubgroupSpec spec = SubgroupSpec::parse(text);
    Weight arr = spec.arrangement();
    CHECK(spec.longest_element().act(arr) == arr.scaled(-1));
  }
  // det_sign of the longest element: C_k contributes (-1)^k, D contributes +1
  CHECK(SubgroupSpec::parse("C3").longest_element().det_sign() == -1);
  CHECK(SubgroupSpec::parse("C4").longest_element().det_sign() == 1);
  CHECK(SubgroupSpec::parse("D3").longest_element().det_sign() == 1);
  CHECK(SubgroupSpec::parse("D4").longest_element().det_sign() == 1);
  CHECK(SubgroupSpec::parse("D1xC2").longest_element().det_sign() == 1);
  CHECK(SubgroupSpec::parse("C4xD3xC2xD1").longest_element().det_sign() == 1);
}

TEST_CASE("spec parse and print round-trip") {
  for (const char* text : {"C3", "D3xC2", "C4xD3xC2xD1", "A2", "D1xC1"}) {
    CHECK(SubgroupSpec::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(SubgroupSpec::parse(""), Error);
  CHECK_THROWS_AS(SubgroupSpec::parse("E8"), Error);
  CHECK_THROWS_AS(SubgroupSpec::parse("C"), Error);
  CHECK_THROWS_AS(SubgroupSpec::parse("CxD2"), Error);
}
