#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "weil/decomposition.hpp"

using namespace weil;

TEST_CASE("enumerate_q shapes") {
  PLambdaPoset P31(Partition({3, 1}));
  auto q31 = enumerate_q(P31);
  REQUIRE(q31.size() == 6);
  CHECK(q31[0].ideal == P31.empty_ideal());
  CHECK(q31[0].signs == std::vector<int>{0});
  CHECK(q31[1].signs == std::vector<int>{1});
  for (int i = 2; i < 6; ++i) CHECK(q31[i].ideal.count() == 1);
  CHECK(q31[2].signs == std::vector<int>{0, 0});
  CHECK(q31[3].signs == std::vector<int>{0, 1});
  CHECK(q31[4].signs == std::vector<int>{1, 0});
  CHECK(q31[5].signs == std::vector<int>{1, 1});

  CHECK(enumerate_q(PLambdaPoset(Partition({1}))).size() == 2);

  auto q2 = enumerate_q(PLambdaPoset(Partition({2})));
  REQUIRE(q2.size() == 3);
  CHECK(q2[2].signs.empty());  // the self-orthogonal ideal has no components
}

TEST_CASE("q_leq on (3,1)") {
  PLambdaPoset P(Partition({3, 1}));
  auto q = enumerate_q(P);
  const QElement& top_even = q[0];  // (empty, 0)
  for (const auto& x : q) CHECK(q_leq(P, x, x));
  // sign sum parity decides membership below the even top element
  CHECK(q_leq(P, q[2], top_even));       // signs 00
  CHECK(q_leq(P, q[5], top_even));       // signs 11
  CHECK_FALSE(q_leq(P, q[3], top_even)); // signs 01
  CHECK_FALSE(q_leq(P, q[4], top_even)); // signs 10
  CHECK_FALSE(q_leq(P, top_even, q[2]));
}

TEST_CASE("theta and psi") {
  PLambdaPoset P1(Partition({1}));
  QElement bottom = psi(P1, P1.empty_ideal());
  CHECK(bottom.ideal == P1.empty_ideal());
  CHECK(bottom.signs == std::vector<int>{0});
  QElement top = psi(P1, P1.full_ideal());
  CHECK(top.ideal == P1.empty_ideal());
  CHECK(top.signs == std::vector<int>{1});

  PLambdaPoset P31(Partition({3, 1}));
  for (const auto& J : P31.enumerate_ideals())
    CHECK(theta(P31, psi(P31, J)) == J);
}

TEST_CASE("theta/psi are mutually inverse bijections, all small partitions") {
  for (auto& lambda : partitions_up_to(8)) {
    PLambdaPoset P(lambda);
    auto ideals = P.enumerate_ideals();
    auto q = enumerate_q(P);
    CHECK(q.size() == ideals.size());
    std::set<std::uint64_t> images;
    for (const auto& qe : q) {
      OrderIdeal J = theta(P, qe);
      images.insert(J.mask);
      CHECK(psi(P, J) == qe);
    }
    CHECK(images.size() == ideals.size());
    for (const auto& J : ideals) CHECK(theta(P, psi(P, J)) == J);
  }
}

TEST_CASE("subspace dimensions") {
  PLambdaPoset P1(Partition({1}));
  auto q1 = enumerate_q(P1);
  CHECK(subspace_dim(P1, q1[0]) == (Poly::monomial(1) + Poly(Rat(1))) / Rat(2));
  CHECK(subspace_dim(P1, q1[1]) == (Poly::monomial(1) - Poly(Rat(1))) / Rat(2));

  PLambdaPoset P31(Partition({3, 1}));
  auto q31 = enumerate_q(P31);
  CHECK(subspace_dim(P31, q31[0]) == (Poly::monomial(4) + Poly(Rat(1))) / Rat(2));

  PLambdaPoset P2(Partition({2}));
  auto q2 = enumerate_q(P2);
  CHECK(subspace_dim(P2, q2[2]) == Poly(Rat(1)));
}

TEST_CASE("dim_connected branches") {
  PLambdaPoset P31(Partition({3, 1}));
  CHECK(dim_connected(Partition({3, 1}), P31.empty_ideal(), 0) ==
        (Poly::monomial(4) - Poly::monomial(2)) / Rat(2));
  CHECK(dim_connected(Partition({3, 1}), P31.empty_ideal(), 1) ==
        (Poly::monomial(4) - Poly::monomial(2)) / Rat(2));

  PLambdaPoset P3(Partition({3}));
  OrderIdeal I3 = ideal_from_points(P3, {{2, 3}});
  CHECK(dim_connected(Partition({3}), I3, 0) ==
        (Poly::monomial(1) + Poly(Rat(1))) / Rat(2));
  CHECK(dim_connected(Partition({3}), I3, 1) ==
        (Poly::monomial(1) - Poly(Rat(1))) / Rat(2));

  // repeated parts put the multiplicity into the exponent
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 4; ++k) {
      Partition lambda(std::vector<int>(l, k));
      PLambdaPoset P(lambda);
      Poly expected;
      if (k == 1) {
        expected = (Poly::monomial(l) + Poly(Rat(1))) / Rat(2);
      } else {
        expected = Poly::monomial(l * k) *
                   (Poly(Rat(1)) - Poly::monomial(-2 * l)) / Rat(2);
      }
      CHECK(dim_connected(lambda, P.empty_ideal(), 0) == expected);
    }

  CHECK_THROWS(dim_connected(Partition({3, 1}),
                             PLambdaPoset(Partition({3, 1})).full_ideal(), 0));
  // (I with I = I^perp) has an empty, hence disconnected, difference
  PLambdaPoset P2(Partition({2}));
  CHECK_THROWS(dim_connected(Partition({2}),
                             ideal_from_points(P2, {{1, 2}}), 0));
}

TEST_CASE("irreducible dimensions for (3,1)") {
  PLambdaPoset P(Partition({3, 1}));
  auto q = enumerate_q(P);
  Poly top = (Poly::monomial(4) - Poly::monomial(2)) / Rat(2);
  Poly pp1 = (Poly::monomial(1) + Poly(Rat(1))) / Rat(2);
  Poly pm1 = (Poly::monomial(1) - Poly(Rat(1))) / Rat(2);
  CHECK(dim_irreducible(P, q[0]) == top);
  CHECK(dim_irreducible(P, q[1]) == top);
  CHECK(dim_irreducible(P, q[2]) == pp1 * pp1);  // (p+1)^2/4
  CHECK(dim_irreducible(P, q[3]) == pp1 * pm1);  // (p^2-1)/4
  CHECK(dim_irreducible(P, q[4]) == pm1 * pp1);
  CHECK(dim_irreducible(P, q[5]) == pm1 * pm1);  // (p-1)^2/4
}

TEST_CASE("the self-orthogonal parameter of (4,2) has dimension one") {
  PLambdaPoset P(Partition({4, 2}));
  auto q = enumerate_q(P);
  int ones = 0;
  for (const auto& qe : q)
    if (dim_irreducible(P, qe) == Poly(Rat(1))) ++ones;
  CHECK(ones == 1);
  CHECK(q.size() == 9);
}

TEST_CASE("completeness and down-set sums") {
  for (auto& lambda : partitions_up_to(7)) {
    PLambdaPoset P(lambda);
    auto q = enumerate_q(P);
    Poly total;
    for (const auto& qe : q) total += dim_irreducible(P, qe);
    CHECK(total == Poly::monomial(lambda.sum()));

    for (const auto& upper : q) {
      Poly sum;
      for (const auto& lower : q)
        if (q_leq(P, lower, upper)) sum += dim_irreducible(P, lower);
      CHECK(sum == subspace_dim(P, upper));
    }
  }
}

TEST_CASE("degree and leading coefficient") {
  for (auto& lambda : partitions_up_to(7)) {
    PLambdaPoset P(lambda);
    for (const auto& qe : enumerate_q(P)) {
      Poly d = dim_irreducible(P, qe);
      std::uint64_t diff = P.perp(qe.ideal).mask & ~qe.ideal.mask;
      CHECK(d.degree() == P.weighted_size(diff));
      CHECK(d.leading_coefficient() ==
            Rat(1, pow_int(Int(2), qe.signs.size())));
      for (const auto& [e, c] : d.coeffs()) {
        Int den = denominator(c);
        while (den % 2 == 0) den /= 2;
        CHECK(den == 1);
      }
    }
  }
}

TEST_CASE("evaluation at odd prime powers is a positive integer") {
  for (auto& lambda : partitions_up_to(6)) {
    PLambdaPoset P(lambda);
    for (const auto& qe : enumerate_q(P))
      for (int qv : {3, 5, 9, 27})
        CHECK(dim_irreducible(P, qe).eval_int(Int(qv)) > 0);
  }
}

TEST_CASE("mobius of a chain cover is -1") {
  MobiusTable t(2, [](int i, int j) { return i <= j; });
  CHECK(t.value(0, 0) == 1);
  CHECK(t.value(0, 1) == -1);
  CHECK_THROWS(t.value(1, 0));
}

TEST_CASE("mobius rows sum to zero on proper intervals") {
  PLambdaPoset P(Partition({3, 1}));
  auto q = enumerate_q(P);
  auto t = mobius_for_q(P, q);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!t.leq(i, j) || i == j) continue;
      Int total = 0;
      for (std::size_t z = 0; z < q.size(); ++z)
        if (t.leq(i, z) && t.leq(z, j)) total += t.value(i, z);
      CHECK(total == 0);
    }
}

TEST_CASE("dimension via mobius inversion matches the product formula") {
  PLambdaPoset P1(Partition({1}));
  auto q1 = enumerate_q(P1);
  auto t1 = mobius_for_q(P1, q1);
  CHECK(dim_via_mobius(P1, q1, t1, 1) ==
        (Poly::monomial(1) - Poly(Rat(1))) / Rat(2));

  for (auto& lambda : partitions_up_to(6)) {
    PLambdaPoset P(lambda);
    auto q = enumerate_q(P);
    auto t = mobius_for_q(P, q);
    for (std::size_t i = 0; i < q.size(); ++i)
      CHECK(dim_via_mobius(P, q, t, i) == dim_irreducible(P, q[i]));
  }
}

TEST_CASE("down-set power sums invert to the max-elements product") {
  // On a random poset with multiplicities, the unique alpha with
  // sum_{J <= I} alpha(J) = t^{[I]} is t^{[I]} prod_{x in max I}(1-t^{-m(x)}).
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + int(rng() % 6);
    std::vector<char> leq(n * n, 0);
    for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) leq[i * n + j] = 1;  // order by index: acyclic
    for (int z = 0; z < n; ++z)  // transitive closure
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (leq[i * n + z] && leq[z * n + j]) leq[i * n + j] = 1;
    std::vector<int> mult(n);
    for (int& m : mult) m = 1 + int(rng() % 3);

    std::vector<std::uint64_t> ideals;
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
      bool down = true;
      for (int i = 0; i < n && down; ++i)
        if ((s >> i) & 1)
          for (int j = 0; j < n; ++j)
            if (leq[j * n + i] && !((s >> j) & 1)) {
              down = false;
              break;
            }
      if (down) ideals.push_back(s);
    }
    auto weighted = [&](std::uint64_t s) {
      int w = 0;
      for (int i = 0; i < n; ++i)
        if ((s >> i) & 1) w += mult[i];
      return w;
    };
    MobiusTable mt(ideals.size(), [&](int i, int j) {
      return (ideals[i] & ~ideals[j]) == 0;
    });
    for (std::size_t ii = 0; ii < ideals.size(); ++ii) {
      Poly alpha;
      for (std::size_t jj = 0; jj < ideals.size(); ++jj)
        if (mt.leq(jj, ii))
          alpha += Poly::monomial(weighted(ideals[jj])) * Rat(mt.value(jj, ii));
      Poly expected = Poly::monomial(weighted(ideals[ii]));
      for (int i = 0; i < n; ++i) {
        if (!((ideals[ii] >> i) & 1)) continue;
        bool maximal = true;
        for (int j = 0; j < n; ++j)
          if (j != i && ((ideals[ii] >> j) & 1) && leq[i * n + j]) maximal = false;
        if (maximal)
          expected = expected * (Poly(Rat(1)) - Poly::monomial(-mult[i]));
      }
      CHECK(alpha == expected);
    }
  }
}

TEST_CASE("hasse dot for (3,1) carries the dimension labels") {
  std::string dot = q_hasse_dot(PLambdaPoset(Partition({3, 1})));
  CHECK(dot.find("(p^4 - p^2)/2") != std::string::npos);
  CHECK(dot.find("(p^2 + 2*p + 1)/4") != std::string::npos);
}
