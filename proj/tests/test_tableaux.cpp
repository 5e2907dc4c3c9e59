#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "glmn/tableaux.hpp"

using namespace glmn;

TEST_CASE("partition normalization and conjugation") {
  CHECK(Partition({3, 2, 0, 0}).rows() == 2);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
  CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugation is an involution") {
  std::vector<Partition> shapes = {Partition{},        Partition({1}),
                                   Partition({2, 1}),  Partition({3, 3, 1}),
                                   Partition({5, 2}),  Partition({2, 2, 2, 1})};
  for (const auto& p : shapes) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("shape data") {
  ShapeData sd = shape_data(Weight::parse("2,-1|-2"));
  CHECK(sd.a == -1);
  CHECK(sd.b == -2);
  CHECK(sd.mu == Weight::parse("2,0|0"));
  CHECK(sd.mu_plus == Partition({2}));
  CHECK(sd.mu_minus == Partition{});
  CHECK(sd.nu_plus == Partition({1, 1}));

  ShapeData nonneg = shape_data(Weight::parse("3,1|2,0"));
  CHECK(nonneg.a == 0);
  CHECK(nonneg.b == 0);
  CHECK(nonneg.mu == Weight::parse("3,1|2,0"));

  ShapeData both = shape_data(Weight::parse("-1|-1"));
  CHECK(both.a == -1);
  CHECK(both.b == -1);
  CHECK(both.mu == Weight::parse("0|0"));

  CHECK_THROWS_AS(shape_data(Weight::parse("0,1|0")), std::invalid_argument);
}

TEST_CASE("semistandard enumeration, small shapes") {
  CHECK(enumerate_standard(Partition({1}), 4).size() == 4);

  auto t21b2 = enumerate_standard(Partition({2, 1}), 2);
  REQUIRE(t21b2.size() == 2);
  CHECK(t21b2[0].rows() == std::vector<std::vector<long>>{{1, 1}, {2}});
  CHECK(t21b2[1].rows() == std::vector<std::vector<long>>{{1, 2}, {2}});

  CHECK(enumerate_standard(Partition({2, 1}), 3).size() == 8);
  CHECK(enumerate_standard(Partition{}, 3).size() == 1);
  CHECK(enumerate_standard(Partition({1, 1, 1}), 2).empty());
}

TEST_CASE("hook content frozen values") {
  CHECK(hook_content_count(Partition({2, 1}), 3) == 8);
  CHECK(hook_content_count(Partition({1}), 7) == 7);
  CHECK(hook_content_count(Partition({5}), 1) == 1);
  CHECK(hook_content_count(Partition{}, 3) == 1);
}

TEST_CASE("enumeration count equals hook content, all shapes <= 6 cells") {
  std::vector<Partition> shapes;
  // all partitions with at most 6 cells
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
    shapes.emplace_back(cur);
    for (long p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, 6, 6);

  for (const auto& shape : shapes)
    for (long bound = 1; bound <= 4; ++bound) {
      auto all = enumerate_standard(shape, static_cast<int>(bound));
      CHECK(mpz_class(all.size()) == hook_content_count(shape, bound));
      std::set<std::vector<long>> words;
      for (const auto& t : all) {
        CHECK(t.is_standard());
        words.insert(t.row_word());
      }
      CHECK(words.size() == all.size());  // no duplicates
    }
}

TEST_CASE("tableau columns strictly increase") {
  Tableau t(Partition({2, 2}), {{1, 2}, {2, 3}}, 3);
  CHECK(t.is_standard());
  CHECK(t.column(0) == std::vector<long>{1, 2});
  CHECK(t.column(1) == std::vector<long>{2, 3});
  Tableau bad(Partition({1, 1}), {{2}, {2}}, 3);
  CHECK_FALSE(bad.is_standard());
}
