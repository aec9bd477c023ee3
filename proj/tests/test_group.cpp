#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weil/group.hpp"

using namespace weil;

TEST_CASE("valuation") {
  GroupSpec G(3, Partition({4}));
  CHECK(G.valuation(0, 18) == 2);  // 18 = 2 * 3^2
  CHECK(G.valuation(0, 0) == 4);
  CHECK(G.valuation(0, 1) == 0);
  CHECK(G.valuation(0, 81) == 4);  // reduces to 0 mod 3^4
}

TEST_CASE("group spec validation") {
  CHECK_THROWS(GroupSpec(2, Partition({1})));
  CHECK_THROWS(GroupSpec(1, Partition({1})));
  GroupSpec G(3, Partition({2, 1}));
  CHECK(G.order() == 27);
  CHECK(G.modulus(0) == 9);
  CHECK(G.modulus(1) == 3);
  CHECK(G.reduce(0, (G.half(0) * 2)) == 1);
}

TEST_CASE("element enumeration round trip") {
  GroupSpec G(3, Partition({2, 1}));
  for (std::int64_t i = 0; i < G.order_i64(); ++i)
    CHECK(G.element_index(G.element_at(i)) == i);
  CHECK(G.element_at(0) == GroupElement{0, 0});
  CHECK(G.element_at(G.order_i64() - 1) == GroupElement{8, 2});
}

TEST_CASE("element_ideal") {
  GroupSpec G31(3, Partition({3, 1}));
  CHECK(element_ideal(G31, {0, 0}) == G31.poset().empty_ideal());
  CHECK(element_ideal(G31, {9, 0}) ==
        ideal_from_points(G31.poset(), {{2, 3}}));

  // the four-point zigzag ideal of the (5,4,4,1) picture
  GroupSpec G(3, Partition({5, 4, 4, 1}));
  std::int64_t p4 = 81, p2 = 9, p3 = 27;
  OrderIdeal I = element_ideal(G, {p4, p2, p3, 0});
  CHECK(G.poset().members(I) ==
        std::vector<PosetPoint>{{3, 5}, {4, 5}, {2, 4}, {3, 4}});
}

TEST_CASE("canonical_element") {
  GroupSpec G(3, Partition({3, 1}));
  const PLambdaPoset& P = G.poset();
  CHECK(canonical_element(G, P.empty_ideal()) == GroupElement{0, 0});
  CHECK(canonical_element(G, ideal_from_points(P, {{2, 3}})) ==
        GroupElement{9, 0});
  // max(full) = {(0,3)} since (0,3) dominates every point of P_(3,1)
  CHECK(P.maximal_elements(P.full_mask()) ==
        std::vector<int>{P.index_of(0, 3)});
  CHECK(canonical_element(G, P.full_ideal()) == GroupElement{1, 0});
}

TEST_CASE("element_ideal(canonical_element(I)) == I exhaustively") {
  for (auto& lambda : partitions_up_to(8)) {
    GroupSpec G(3, lambda);
    for (const auto& I : G.poset().enumerate_ideals())
      CHECK(element_ideal(G, canonical_element(G, I)) == I);
  }
}

TEST_CASE("characteristic members") {
  GroupSpec G(3, Partition({3, 1}));
  const PLambdaPoset& P = G.poset();
  CHECK(characteristic_members(G, P.empty_ideal()) ==
        std::vector<GroupElement>{{0, 0}});
  CHECK(characteristic_members(G, P.full_ideal()).size() == 81);

  auto members = characteristic_members(G, ideal_from_points(P, {{2, 3}}));
  CHECK(members == std::vector<GroupElement>{{0, 0}, {9, 0}, {18, 0}});
}

TEST_CASE("characteristic subgroup order and membership filter") {
  for (std::int64_t p : {3, 5}) {
    for (auto& lambda : partitions_up_to(6)) {
      GroupSpec G(p, lambda);
      for (const auto& I : G.poset().enumerate_ideals()) {
        auto members = characteristic_members(G, I, 1 << 22);
        Int expected = pow_int(Int(p), G.poset().weighted_size(I));
        CHECK(Int(members.size()) == expected);
        // brute-force filter agrees
        if (G.order_i64() <= 729) {
          std::set<GroupElement> filter;
          for (std::int64_t i = 0; i < G.order_i64(); ++i) {
            GroupElement a = G.element_at(i);
            if (element_ideal(G, a).subset_of(I)) filter.insert(a);
          }
          CHECK(filter == std::set<GroupElement>(members.begin(), members.end()));
        }
      }
    }
  }
}

TEST_CASE("phases") {
  Phase a(1, 3), b(5, 3);
  CHECK(a + b == Phase(0, 1));
  CHECK((a - b) == Phase(2, 3));
  CHECK(Phase(7, 3) == Phase(1, 3));
  CHECK(Phase(-1, 3) == Phase(2, 3));
  CHECK(Phase(2, 4) == Phase(1, 2));
  CHECK_THROWS(Phase(1, 0));
}

TEST_CASE("cocycle basic identities") {
  GroupSpec G(3, Partition({2, 1}));
  const std::int64_t n = G.order_i64();
  KElement zero{G.zero_element(), G.zero_element()};
  for (std::int64_t i = 0; i < n * n; i += 7) {
    KElement k = G.k_at(i);
    CHECK(G.cocycle(k, zero).is_zero());
    CHECK(G.cocycle(zero, k).is_zero());
    CHECK(G.cocycle(k, k).is_zero());
  }
}

TEST_CASE("cocycle is biadditive and alternating with the right commutator") {
  GroupSpec G(3, Partition({1, 1}));
  const std::int64_t nk = G.k_order_i64();
  auto addk = [&](const KElement& x, const KElement& y) {
    return KElement{G.add(x.a, y.a), G.add(x.chi, y.chi)};
  };
  for (std::int64_t i = 0; i < nk; i += 3)
    for (std::int64_t j = 0; j < nk; j += 5) {
      KElement k = G.k_at(i), l = G.k_at(j);
      for (std::int64_t m = 0; m < nk; m += 11) {
        KElement x = G.k_at(m);
        CHECK(G.cocycle(addk(k, x), l) == G.cocycle(k, l) + G.cocycle(x, l));
        CHECK(G.cocycle(k, addk(l, x)) == G.cocycle(k, l) + G.cocycle(k, x));
      }
      // c(k,l) - c(l,k) is the eigencharacter pairing chi(y) mu(x)^{-1}
      Phase comm = G.cocycle(k, l) - G.cocycle(l, k);
      Phase expected = G.pairing(k.chi, l.a) - G.pairing(l.chi, k.a);
      CHECK(comm == expected);
    }
}

TEST_CASE("dual subgroup annihilator oracle") {
  GroupSpec G2(3, Partition({2}));
  CHECK(dual_subgroup_check(G2, G2.poset().empty_ideal()));
  CHECK(dual_subgroup_check(G2, ideal_from_points(G2.poset(), {{1, 2}})));

  GroupSpec G31(3, Partition({3, 1}));
  CHECK(dual_subgroup_check(G31, ideal_from_points(G31.poset(), {{2, 3}})));

  for (auto& lambda : partitions_up_to(5)) {
    GroupSpec G(3, lambda);
    for (const auto& I : G.poset().enumerate_ideals())
      CHECK(dual_subgroup_check(G, I));
  }
}

TEST_CASE("degeneration order via endomorphism enumeration") {
  // b is an endomorphic image of a iff I(b) is contained in I(a); checked by
  // enumerating End(A) for small shapes.
  for (auto& lambda : {Partition({2, 1}), Partition({1, 1}), Partition({3}),
                       Partition({2, 2})}) {
    GroupSpec G(3, lambda);
    const int l = G.length();
    std::vector<std::vector<std::int64_t>> hom_choices(l * l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        // Hom(Z/p^lj, Z/p^li) = p^{max(0, li-lj)} Z/p^li
        std::int64_t step = 1;
        for (int e = 0; e < std::max(0, lambda.parts[i] - lambda.parts[j]); ++e)
          step *= G.p();
        for (std::int64_t c = 0; c < G.modulus(i); c += step)
          hom_choices[i * l + j].push_back(c);
      }
    std::vector<std::size_t> pick(l * l, 0);
    std::vector<std::set<GroupElement>> images(G.order_i64());
    bool done = false;
    while (!done) {
      for (std::int64_t ai = 0; ai < G.order_i64(); ++ai) {
        GroupElement a = G.element_at(ai), b(l, 0);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < l; ++j)
            b[i] = G.reduce(i, b[i] + hom_choices[i * l + j][pick[i * l + j]] * a[j]);
        images[ai].insert(b);
      }
      done = true;
      for (int t = l * l - 1; t >= 0; --t) {
        if (++pick[t] < hom_choices[t].size()) {
          done = false;
          break;
        }
        pick[t] = 0;
      }
    }
    for (std::int64_t ai = 0; ai < G.order_i64(); ++ai) {
      GroupElement a = G.element_at(ai);
      OrderIdeal Ia = element_ideal(G, a);
      for (std::int64_t bi = 0; bi < G.order_i64(); ++bi) {
        GroupElement b = G.element_at(bi);
        bool reachable = images[ai].count(b) > 0;
        CHECK(reachable == element_ideal(G, b).subset_of(Ia));
      }
    }
  }
}

TEST_CASE("primary split") {
  auto specs = primary_split({45, 3});
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].p() == 3);
  CHECK(specs[0].partition() == Partition({2, 1}));
  CHECK(specs[1].p() == 5);
  CHECK(specs[1].partition() == Partition({1}));

  auto single = primary_split({7});
  REQUIRE(single.size() == 1);
  CHECK(single[0].p() == 7);
  CHECK(single[0].partition() == Partition({1}));

  auto two = primary_split({15, 15});
  REQUIRE(two.size() == 2);
  CHECK(two[0].partition() == Partition({1, 1}));
  CHECK(two[1].partition() == Partition({1, 1}));

  CHECK_THROWS(primary_split({6}));
  CHECK_THROWS(primary_split({1}));
}
