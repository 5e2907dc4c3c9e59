#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "glmn/dist.hpp"

using namespace glmn;

namespace {

Word make_word(std::vector<int> v, std::vector<int> w) {
  Word out;
  for (int k : v) out.v.push_back(static_cast<std::uint8_t>(k));
  for (int k : w) out.w.push_back(static_cast<std::uint8_t>(k));
  return out;
}

TensorVec basis(const DistContext& c, std::vector<int> v, std::vector<int> w) {
  return TensorVec::basis(c, make_word(std::move(v), std::move(w)));
}

}  // namespace

TEST_CASE("odd e_12 on v2 (x) v2 picks up the Koszul sign") {
  DistContext c{1, 1, 0};
  TensorVec x = basis(c, {2, 2}, {});
  TensorVec got = apply_E(c, 1, 2, 1, x);
  TensorVec expected =
      basis(c, {1, 2}, {}) - basis(c, {2, 1}, {});  // |v2| = 1
  CHECK(got == expected);
}

TEST_CASE("e_ij annihilates words without matching letters") {
  DistContext c{2, 1, 0};
  CHECK(apply_E(c, 1, 2, 1, basis(c, {1, 3}, {2})).is_zero());
  CHECK(apply_E(c, 3, 1, 1, basis(c, {2}, {2})).is_zero());
}

TEST_CASE("even divided power distributes over slots") {
  DistContext c{2, 1, 0};
  TensorVec got = apply_E(c, 1, 2, 2, basis(c, {2, 2}, {}));
  CHECK(got == basis(c, {1, 1}, {}));
  // t larger than the number of matching slots gives zero
  CHECK(apply_E(c, 1, 2, 3, basis(c, {2, 2}, {})).is_zero());
}

TEST_CASE("action on the dual letters") {
  DistContext c{2, 1, 0};
  // e_12 . w_1 = -w_2
  TensorVec got = apply_E(c, 1, 2, 1, basis(c, {}, {1}));
  CHECK(got == basis(c, {}, {2}).scaled(Scalar::make(0, -1)));
}

TEST_CASE("odd operators square to zero") {
  DistContext c{2, 2, 0};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Word word;
    for (int s = 0; s < 3; ++s)
      word.v.push_back(static_cast<std::uint8_t>(1 + rng() % 4));
    word.w.push_back(static_cast<std::uint8_t>(1 + rng() % 4));
    TensorVec x = TensorVec::basis(c, word);
    for (auto [i, j] : {std::pair{1, 3}, {3, 1}, {2, 4}, {4, 2}, {1, 4}}) {
      TensorVec once = apply_E(c, i, j, 1, x);
      CHECK(apply_E(c, i, j, 1, once).is_zero());
    }
  }
}

TEST_CASE("weight equivariance of apply_E") {
  DistContext c{2, 1, 0};
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Word word;
    for (int s = 0; s < 2; ++s)
      word.v.push_back(static_cast<std::uint8_t>(1 + rng() % 3));
    word.w.push_back(static_cast<std::uint8_t>(1 + rng() % 3));
    std::vector<long> mu = word_weight(c, word);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        bool odd = c.odd_letter(i) != c.odd_letter(j);
        int t = odd ? 1 : 2;
        TensorVec out = apply_E(c, i, j, t, TensorVec::basis(c, word));
        for (const auto& [res, coeff] : out.terms) {
          std::vector<long> nu = word_weight(c, res);
          for (int s = 0; s < 3; ++s) {
            long expect = mu[static_cast<size_t>(s)];
            if (s == i - 1) expect += t;
            if (s == j - 1) expect -= t;
            CHECK(nu[static_cast<size_t>(s)] == expect);
          }
        }
      }
  }
}

TEST_CASE("diagonal actions") {
  DistContext c{1, 1, 3};
  TensorVec x = basis(c, {1, 2}, {2});  // weight (1, 0)
  CHECK(apply_hq(c, {1, 0}, 3, x) == x);
  CHECK(apply_hq(c, {0, 1}, 3, x).is_zero());
  CHECK(apply_binom(c, 1, 0, x) == x);

  DistContext c0{1, 1, 0};
  TensorVec y = basis(c0, {1, 2}, {2});
  CHECK(apply_h0(c0, 1, y).is_zero());          // |mu| = 1
  CHECK_FALSE(apply_h0(c0, 0, y).is_zero());    // wrong module
  CHECK(apply_h0(c0, 0, y) == y);               // scales by |mu| - 0 = 1
  CHECK_THROWS_AS(apply_h0(c, 0, x), std::invalid_argument);
  CHECK_THROWS_AS(apply_hq(c0, {0, 0}, 3, y), std::invalid_argument);
}

TEST_CASE("apply_word composes right to left") {
  DistContext c{1, 1, 0};
  TensorVec x = basis(c, {2}, {});
  OperatorWord ops{OpE{2, 1, 1}, OpE{1, 2, 1}};  // e_21 (e_12 x)
  TensorVec got = apply_word(c, ops, x);
  CHECK(got == x);  // e_12 v_2 = v_1, e_21 v_1 = v_2
  CHECK(apply_word(c, {}, x) == x);
  CHECK(apply_word(c, ops, TensorVec(c)).is_zero());
}

TEST_CASE("idempotent operator algebra on V^2 W^1") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
    DistContext c{m, n, 3};
    long q = 3;
    int dim = m + n;
    std::vector<std::vector<long>> alphas;
    std::vector<long> cur(static_cast<size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == dim) {
        alphas.push_back(cur);
        return;
      }
      for (long a = 0; a < q; ++a) {
        cur[static_cast<size_t>(pos)] = a;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);

    for_each_word(c, 2, 1, [&](const Word& word) {
      TensorVec x = TensorVec::basis(c, word);
      TensorVec total(c);
      for (const auto& alpha : alphas) {
        TensorVec once = apply_hq(c, alpha, q, x);
        CHECK(apply_hq(c, alpha, q, once) == once);  // idempotent
        total = total + once;
      }
      CHECK(total == x);  // partition of unity
    });

    // orthogonality spot check on a fixed word
    TensorVec x = TensorVec::basis(c, [&] {
      Word w;
      w.v = {1, static_cast<std::uint8_t>(dim)};
      w.w = {1};
      return w;
    }());
    for (const auto& a : alphas)
      for (const auto& b : alphas) {
        if (a == b) continue;
        CHECK(apply_hq(c, a, q, apply_hq(c, b, q, x)).is_zero());
      }
  }
}

TEST_CASE("commutation clauses on small modules") {
  DistContext c{2, 1, 3};
  long q = 3;
  // frozen spec instance: q=3, i=1, j=2, t=1, a=1 on V^2
  CHECK_FALSE(check_commutation_clause(c, 2, 0, 1, 2, 1, 1, q, 2, 0).has_value());
  // clause 1 with every s outside {i,j}
  CHECK_FALSE(check_commutation_clause(c, 1, 3, 1, 2, 1, 1, q, 2, 1).has_value());
  // clause 3
  CHECK_FALSE(check_commutation_clause(c, 3, 0, 1, 2, 1, 2, q, 2, 1).has_value());
  CHECK_THROWS_AS(check_commutation_clause(c, 1, 1, 1, 2, 1, 0, q, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("a deliberately wrong congruence target is falsified") {
  DistContext c{1, 1, 3};
  long q = 3;
  // correct: h_a(e_i) e_ij = e_ij h_{a-1}(e_i); sabotage with a+1 instead
  bool found = false;
  for_each_word(c, 2, 1, [&](const Word& word) {
    if (found) return;
    TensorVec x = TensorVec::basis(c, word);
    TensorVec lhs = apply_hq_coord(c, 1, 1, q, apply_E(c, 1, 2, 1, x));
    TensorVec rhs = apply_E(c, 1, 2, 1, apply_hq_coord(c, 1, 2, q, x));
    if (!(lhs == rhs)) found = true;
  });
  CHECK(found);
}

TEST_CASE("kernel annihilation") {
  DistContext c{1, 1, 3};
  CHECK(kernel_annihilation(c, 0, 3, {1, 0}, 2));
  CHECK(kernel_annihilation(c, 1, 3, {0, 0}, 2));
  CHECK_THROWS_AS(kernel_annihilation(c, 0, 3, {1, 2}, 2),
                  std::invalid_argument);  // |alpha| = 0 (mod 3)
}

TEST_CASE("kernel witness frozen example") {
  DistContext c{1, 1, 3};
  DistMonomialPair u;
  u.upper[{1, 2}] = 1;
  auto outcome = kernel_witness(c, {u}, {1, 2}, 3, 0);
  CHECK(outcome.k == 1);
  CHECK(outcome.beta == std::vector<long>{2, 1});
  CHECK(outcome.z == make_word({1, 1, 2, 2}, {1}));
  CHECK(outcome.image.terms.size() == 3);
}

TEST_CASE("kernel witness for the empty element returns z itself") {
  DistContext c{1, 1, 3};
  DistMonomialPair empty;
  auto outcome = kernel_witness(c, {empty}, {1, 2}, 3, 0);
  TensorVec expected = TensorVec::basis(c, outcome.z);
  CHECK(outcome.image == expected);
}

TEST_CASE("kernel witness with mixed odd factors in GL(2|1)") {
  DistContext c{2, 1, 3};
  DistMonomialPair u;
  u.upper[{1, 3}] = 1;
  u.lower[{3, 1}] = 1;
  auto outcome = kernel_witness(c, {u}, {1, 0, 2}, 3, 0);
  CHECK_FALSE(outcome.image.is_zero());
  // h_alpha fixes z by construction
  TensorVec zv = TensorVec::basis(c, outcome.z);
  CHECK(apply_hq(c, {1, 0, 2}, 3, zv) == zv);
}

TEST_CASE("kernel witness input validation") {
  DistContext c{1, 1, 3};
  DistMonomialPair u;
  u.upper[{1, 2}] = 1;
  CHECK_THROWS_AS(kernel_witness(c, {u}, {1, 1}, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(kernel_witness(c, {u, u}, {1, 2}, 3, 0), std::invalid_argument);
  DistMonomialPair bad;
  bad.upper[{1, 2}] = 2;  // odd position
  CHECK_THROWS_AS(kernel_witness(c, {bad}, {1, 2}, 3, 0), std::invalid_argument);
}

TEST_CASE("characteristic zero annihilation and failure on the wrong module") {
  DistContext c{1, 1, 0};
  CHECK(char0_annihilation(c, 0, 2));
  CHECK(char0_annihilation(c, 1, 2));
  CHECK(char0_annihilation(c, -1, 2));
  // H0(l) does not kill V^(l+k) (x) W^(k+1)
  bool nonzero = false;
  for_each_word(c, 1, 2, [&](const Word& word) {
    if (!apply_h0(c, 0, TensorVec::basis(c, word)).is_zero()) nonzero = true;
  });
  CHECK(nonzero);
}

TEST_CASE("characteristic zero witness with a diagonal polynomial part") {
  DistContext c{1, 1, 0};
  Char0Summand s;
  s.ops.upper[{1, 2}] = 1;
  s.g.coeffs[{1}] = 1;  // g = e_1
  auto outcome = char0_witness(c, {s}, 0);
  CHECK_FALSE(outcome.image.is_zero());
  CHECK(outcome.shifts.size() == 1);
  CHECK(outcome.shifts[0] > 0);
  // the witness stays inside the degree-l family
  CHECK(static_cast<long>(outcome.z.v.size()) -
            static_cast<long>(outcome.z.w.size()) ==
        0);
}

TEST_CASE("characteristic zero witness for a pure monomial") {
  DistContext c{2, 1, 0};
  Char0Summand s;
  s.ops.upper[{1, 2}] = 2;
  s.ops.lower[{2, 1}] = 1;
  s.g.coeffs[{}] = 1;  // g = 1
  auto outcome = char0_witness(c, {s}, 1);
  CHECK_FALSE(outcome.image.is_zero());
}
