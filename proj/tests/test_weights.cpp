#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "glmn/weights.hpp"

using namespace glmn;

namespace {

Weight W(const std::string& s) { return Weight::parse(s); }

// Prefix-sum oracle, spelled out independently of dominance_leq.
bool prefix_oracle(const Weight& mu, const Weight& la) {
  if (mu.sum() != la.sum()) return false;
  long acc = 0;
  for (int k = 0; k + 1 < mu.size(); ++k) {
    acc += la[k] - mu[k];
    if (acc < 0) return false;
  }
  return true;
}

std::vector<Weight> random_dominants(int m, int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-4, 6);
  std::vector<Weight> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<long> e(static_cast<size_t>(m + n));
    for (auto& v : e) v = entry(rng);
    std::sort(e.begin(), e.begin() + m, std::greater<>());
    std::sort(e.begin() + m, e.end(), std::greater<>());
    out.emplace_back(std::move(e), m, n);
  }
  return out;
}

}  // namespace

TEST_CASE("weight parse/format round trip") {
  CHECK(W("2,0|1").str() == "2,0|1");
  CHECK(W("2,0|1").m() == 2);
  CHECK(W("2,0|1").n() == 1);
  CHECK(W("-1,3|0,0").sum() == 2);
  CHECK(W("1,2|3").plus_sum() == 3);
  CHECK(W("1,2|3").minus_sum() == 3);
  CHECK_THROWS_AS(W("1,2,3"), std::invalid_argument);
}

TEST_CASE("is_dominant") {
  CHECK(is_dominant(W("2,0|1")));
  CHECK_FALSE(is_dominant(W("0,1|0")));
  CHECK(is_dominant(W("3,3|-1,-5")));
}

TEST_CASE("dominance order examples") {
  CHECK(dominance_leq(W("1,1|0"), W("2,0|0")));
  CHECK(dominance_leq(W("1,1,0|"), W("2,0,0|")));
  CHECK(dominance_leq(W("2,0|1"), W("2,0|1")));
  CHECK_FALSE(dominance_leq(W("1,0|1"), W("1,0|0")));
}

TEST_CASE("strong order examples") {
  CHECK(strong_leq(W("1,1|0"), W("2,0|0")));
  // weaker than plain dominance: this pair is comparable only for the full order
  CHECK(dominance_leq(W("1,0|1,0"), W("2,0|0,0")));
  CHECK_FALSE(strong_leq(W("1,0|1,0"), W("2,0|0,0")));
  CHECK(strong_leq(W("1,0|1,0"), W("1,0|1,0")));
}

TEST_CASE("both orders are partial orders; strong refines dominance") {
  auto ws = random_dominants(2, 2, 40, 17);
  for (const auto& a : ws) {
    CHECK(dominance_leq(a, a));
    CHECK(strong_leq(a, a));
    for (const auto& b : ws) {
      CHECK(dominance_leq(a, b) == prefix_oracle(a, b));
      if (strong_leq(a, b)) CHECK(dominance_leq(a, b));
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
      if (a.sum() != b.sum()) {
        CHECK_FALSE(dominance_leq(a, b));  // distinct degrees never compare
      }
      for (const auto& c : ws)
        if (dominance_leq(a, b) && dominance_leq(b, c))
          CHECK(dominance_leq(a, c));
    }
  }
}

TEST_CASE("dominated_dominant_gl small oracle") {
  auto set = dominated_dominant_gl({2, 0});
  CHECK(set == std::vector<std::vector<long>>{{2, 0}, {1, 1}});
  auto set3 = dominated_dominant_gl({2, 1, 0});
  CHECK(set3 == std::vector<std::vector<long>>{{2, 1, 0}, {1, 1, 1}});
  // includes negative entries when the input has them
  auto neg = dominated_dominant_gl({1, -1});
  CHECK(neg == std::vector<std::vector<long>>{{1, -1}, {0, 0}});
}

TEST_CASE("admissible decomposition GL(1|1)") {
  WeightIdeal ideal({W("1|0")});
  auto dec = admissible_decomposition(ideal, 1);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first.a == 1);
  CHECK(dec[0].first.b == 0);
  CHECK(dec[0].second == std::vector<Weight>{W("1|0")});
  CHECK(dec[1].first.a == 0);
  CHECK(dec[1].first.b == 1);
  CHECK(dec[1].first.shift == 1);
  CHECK(dec[1].second == std::vector<Weight>{W("0|1")});
}

TEST_CASE("admissible decomposition trivial and GL(2|1) cases") {
  auto dec0 = admissible_decomposition(WeightIdeal({W("0|0")}), 0);
  REQUIRE(dec0.size() == 1);
  CHECK(dec0[0].second == std::vector<Weight>{W("0|0")});

  auto dec21 = admissible_decomposition(WeightIdeal({W("1,0|0")}), 0);
  REQUIRE(dec21.size() == 1);
  CHECK(dec21[0].first.a == 1);
  CHECK(dec21[0].first.b == 0);
  CHECK(dec21[0].second == std::vector<Weight>{W("1,0|0")});
}

TEST_CASE("decomposition slices are disjoint ideals with fixed block sums") {
  WeightIdeal ideal({W("2,0|1"), W("1,1|1")});
  auto dec = admissible_decomposition(ideal, 2);
  std::vector<Weight> all;
  for (const auto& [pair, members] : dec) {
    for (const Weight& w : members) {
      CHECK(is_dominant(w));
      CHECK(w.plus_sum() == pair.a);
      CHECK(w.minus_sum() == pair.b);
      all.push_back(w);
    }
    // downward closed under the strong order
    for (const Weight& w : members)
      for (const Weight& below : strong_ideal_below(w))
        CHECK(std::count(members.begin(), members.end(), below) == 1);
  }
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("special filtration") {
  CHECK(special_filtration({W("0|0")}) == std::vector<Weight>{W("0|0")});
  auto two = special_filtration({W("2,0|0"), W("1,1|0")});
  CHECK(two == std::vector<Weight>{W("2,0|0"), W("1,1|0")});
  // a chain comes out in reverse order
  auto chain = special_filtration({W("3,0,0|0"), W("2,1,0|0"), W("1,1,1|0")});
  CHECK(chain == std::vector<Weight>{W("3,0,0|0"), W("2,1,0|0"), W("1,1,1|0")});
  CHECK_THROWS_AS(special_filtration({W("2,0|0")}), std::invalid_argument);

  // every tail is an ideal
  auto full = special_filtration(strong_ideal_below(W("3,1|0")));
  for (size_t k = 0; k < full.size(); ++k) {
    std::vector<Weight> tail(full.begin() + static_cast<long>(k), full.end());
    CHECK_NOTHROW(special_filtration(tail));
  }
}

TEST_CASE("congruent predecessor frozen example") {
  Weight mu = congruent_predecessor(W("2|1"), {0, 0}, 3);
  CHECK(mu == W("0|3"));
  CHECK_THROWS_AS(congruent_predecessor(W("2|1"), {0, 1}, 3),
                  std::invalid_argument);
}

TEST_CASE("congruent predecessor fixes an already-congruent weight") {
  Weight la = W("3,1|2,0");
  Weight mu = congruent_predecessor(la, {0, 1, 2, 0}, 3);
  CHECK(mu == la);
}

TEST_CASE("congruent predecessor postconditions on 200 seeded instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> mdist(1, 3), ndist(1, 3);
  std::vector<long> qs{3, 5, 9};
  int done = 0;
  while (done < 200) {
    int m = mdist(rng), n = ndist(rng);
    long q = qs[rng() % qs.size()];
    std::uniform_int_distribution<long> entry(-6, 8);
    std::vector<long> e(static_cast<size_t>(m + n));
    for (auto& v : e) v = entry(rng);
    std::sort(e.begin(), e.begin() + m, std::greater<>());
    std::sort(e.begin() + m, e.end(), std::greater<>());
    Weight la(e, m, n);
    std::vector<long> alpha(static_cast<size_t>(m + n));
    for (auto& v : alpha) v = static_cast<long>(rng() % static_cast<unsigned long>(q));
    // adjust alpha_1 so the degree congruence holds
    long diff = la.sum();
    for (size_t i = 1; i < alpha.size(); ++i) diff -= alpha[i];
    alpha[0] = ((diff % q) + q) % q;

    Weight mu = congruent_predecessor(la, alpha, q);
    CHECK(is_dominant(mu));
    CHECK(dominance_leq(mu, la));
    for (int i = 0; i < m + n; ++i)
      CHECK((((mu[i] - alpha[static_cast<size_t>(i)]) % q) + q) % q == 0);
    ++done;
  }
}
