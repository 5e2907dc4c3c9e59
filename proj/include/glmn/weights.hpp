#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace glmn {

/// Integer weight of GL(m|n): m even entries followed by n odd entries.
/// Text form "a1,...,am|b1,...,bn".
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<long> entries, int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  long operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<long>& entries() const { return e_; }

  std::vector<long> plus_block() const;   // first m entries
  std::vector<long> minus_block() const;  // last n entries
  long sum() const;
  long plus_sum() const;
  long minus_sum() const;

  static Weight parse(const std::string& text);
  std::string str() const;

  bool operator==(const Weight& o) const = default;
  // lexicographic on (m, n, entries); used only for deterministic containers
  std::strong_ordering operator<=>(const Weight& o) const = default;

 private:
  std::vector<long> e_;
  int m_ = 0, n_ = 0;
};

bool is_dominant(const Weight& w);

/// mu trianglelefteq lambda: equal entry sums and all prefix sums of
/// lambda - mu nonnegative (root-lattice dominance, odd roots included).
bool dominance_leq(const Weight& mu, const Weight& lambda);

/// Strong Bruhat-Tits order: blockwise dominance on the GL(m) and GL(n)
/// parts, each block preserving its own sum.
bool strong_leq(const Weight& mu, const Weight& lambda);

/// All dominant GL(k)-weights mu with mu trianglelefteq nu, nu dominant.
/// Sorted descending lexicographically.
std::vector<std::vector<long>> dominated_dominant_gl(const std::vector<long>& nu);

/// Finite strong-order ideal below a dominant weight: blockwise product of
/// the GL(m) and GL(n) dominated sets.
std::vector<Weight> strong_ideal_below(const Weight& nu);

/// Finitely generated ideal of dominant weights, kept by its generators
/// (normalized to be pairwise incomparable under dominance).
class WeightIdeal {
 public:
  explicit WeightIdeal(std::vector<Weight> generators);
  const std::vector<Weight>& generators() const { return gens_; }
  bool contains(const Weight& w) const;

 private:
  std::vector<Weight> gens_;
};

struct AdmissiblePair {
  long a = 0, b = 0;  // block degrees |mu_+| = a, |mu_-| = b
  int gen_index = 0;  // generator giving (a,b) = (r_+ - shift, r_- + shift)
  int shift = 0;
};

/// Finite slices Gamma_{a,b} of the ideal for shifts up to l_max, each the
/// strong-order downward closure of the shifted generators.  Slices are
/// pairwise disjoint; members are dominant and share block sums (a,b).
std::vector<std::pair<AdmissiblePair, std::vector<Weight>>>
admissible_decomposition(const WeightIdeal& ideal, int l_max);

/// Orders a finite strong-order ideal as lambda_0, lambda_1, ... so that
/// every tail is again an ideal; among several maximal elements the
/// lexicographically largest is removed first.
std::vector<Weight> special_filtration(const std::vector<Weight>& ideal_set);

/// Constructive form of the congruent-predecessor lemma: a dominant
/// mu trianglelefteq lambda with mu_i == alpha_i (mod q) for all i, built by
/// greedy largest choices on the even block, greedy smallest choices on the
/// odd tail, a balancing entry at position m+1 and the minimal shift t >= 0
/// that restores dominance.  Requires |alpha| == |lambda| (mod q).
Weight congruent_predecessor(const Weight& lambda,
                             const std::vector<long>& alpha, long q);

}  // namespace glmn
