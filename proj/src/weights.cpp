#include "glmn/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glmn {

Weight::Weight(std::vector<long> entries, int m, int n)
    : e_(std::move(entries)), m_(m), n_(n) {
  if (m_ < 0 || n_ < 0 || e_.size() != static_cast<size_t>(m_ + n_))
    throw std::invalid_argument("weight length must equal m+n");
}

std::vector<long> Weight::plus_block() const {
  return {e_.begin(), e_.begin() + m_};
}

std::vector<long> Weight::minus_block() const {
  return {e_.begin() + m_, e_.end()};
}

long Weight::sum() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

long Weight::plus_sum() const {
  return std::accumulate(e_.begin(), e_.begin() + m_, 0L);
}

long Weight::minus_sum() const {
  return std::accumulate(e_.begin() + m_, e_.end(), 0L);
}

Weight Weight::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("weight needs a '|' block separator: " + text);
  auto parse_block = [](const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad weight entry: " + item);
      out.push_back(v);
    }
    return out;
  };
  std::vector<long> plus = parse_block(text.substr(0, bar));
  std::vector<long> minus = parse_block(text.substr(bar + 1));
  std::vector<long> all = plus;
  all.insert(all.end(), minus.begin(), minus.end());
  return Weight(std::move(all), static_cast<int>(plus.size()),
                static_cast<int>(minus.size()));
}

std::string Weight::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i == m_) out += '|';
    else if (i > 0) out += ',';
    out += std::to_string(e_[static_cast<size_t>(i)]);
  }
  if (m_ == size()) out += '|';
  return out;
}

namespace {

void check_same_shape(const Weight& a, const Weight& b) {
  if (a.m() != b.m() || a.n() != b.n())
    throw std::invalid_argument("weight shape mismatch");
}

bool weakly_decreasing(const std::vector<long>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

// GL(k) dominance on raw entry vectors (equal sums + prefix test).
bool gl_dominance_leq(const std::vector<long>& mu, const std::vector<long>& la) {
  long diff = 0, total_mu = 0, total_la = 0;
  for (size_t k = 0; k < mu.size(); ++k) {
    total_mu += mu[k];
    total_la += la[k];
  }
  if (total_mu != total_la) return false;
  for (size_t k = 0; k + 1 < mu.size(); ++k) {
    diff += la[k] - mu[k];
    if (diff < 0) return false;
  }
  return true;
}

}  // namespace

bool is_dominant(const Weight& w) {
  return weakly_decreasing(w.plus_block()) && weakly_decreasing(w.minus_block());
}

bool dominance_leq(const Weight& mu, const Weight& lambda) {
  check_same_shape(mu, lambda);
  if (mu.sum() != lambda.sum()) return false;
  long diff = 0;
  for (int k = 0; k + 1 < mu.size(); ++k) {
    diff += lambda[k] - mu[k];
    if (diff < 0) return false;
  }
  return true;
}

bool strong_leq(const Weight& mu, const Weight& lambda) {
  check_same_shape(mu, lambda);
  return gl_dominance_leq(mu.plus_block(), lambda.plus_block()) &&
         gl_dominance_leq(mu.minus_block(), lambda.minus_block());
}

std::vector<std::vector<long>> dominated_dominant_gl(const std::vector<long>& nu) {
  if (!weakly_decreasing(nu))
    throw std::invalid_argument("dominated_dominant_gl expects a dominant weight");
  size_t k = nu.size();
  std::vector<long> prefix(k);
  std::partial_sum(nu.begin(), nu.end(), prefix.begin());
  long total = k ? prefix[k - 1] : 0;

  std::vector<std::vector<long>> out;
  std::vector<long> cur(k);
  auto rec = [&](auto&& self, size_t j, long acc) -> void {
    if (j + 1 == k) {
      long last = total - acc;
      if (k == 1 || last <= cur[k - 2]) {
        cur[k - 1] = last;
        out.push_back(cur);
      }
      return;
    }
    long rest = total - acc;
    long slots = static_cast<long>(k - j);
    long hi = prefix[j] - acc;  // prefix constraint at position j
    if (j > 0) hi = std::min(hi, cur[j - 1]);
    // remaining entries are each <= cur[j], so cur[j] >= ceil(rest/slots)
    long lo = (rest >= 0) ? (rest + slots - 1) / slots
                          : -((-rest) / slots);
    for (long v = hi; v >= lo; --v) {
      cur[j] = v;
      self(self, j + 1, acc + v);
    }
  };
  if (k == 0) {
    out.push_back({});
    return out;
  }
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Weight> strong_ideal_below(const Weight& nu) {
  if (!is_dominant(nu))
    throw std::invalid_argument("strong_ideal_below expects a dominant weight");
  auto plus = dominated_dominant_gl(nu.plus_block());
  auto minus = dominated_dominant_gl(nu.minus_block());
  std::vector<Weight> out;
  out.reserve(plus.size() * minus.size());
  for (const auto& p : plus)
    for (const auto& q : minus) {
      std::vector<long> e = p;
      e.insert(e.end(), q.begin(), q.end());
      out.emplace_back(std::move(e), nu.m(), nu.n());
    }
  std::sort(out.begin(), out.end());
  return out;
}

WeightIdeal::WeightIdeal(std::vector<Weight> generators) {
  if (generators.empty())
    throw std::invalid_argument("ideal needs at least one generator");
  for (const auto& g : generators) {
    check_same_shape(g, generators.front());
    if (!is_dominant(g))
      throw std::invalid_argument("non-dominant generator: " + g.str());
  }
  // drop generators dominated by another one, then duplicates
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators)
      if (!(g == h) && dominance_leq(g, h)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool WeightIdeal::contains(const Weight& w) const {
  if (!is_dominant(w)) return false;
  for (const auto& g : gens_)
    if (dominance_leq(w, g)) return true;
  return false;
}

std::vector<std::pair<AdmissiblePair, std::vector<Weight>>>
admissible_decomposition(const WeightIdeal& ideal, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  const auto& gens = ideal.generators();
  int m = gens.front().m(), n = gens.front().n();

  std::vector<std::pair<AdmissiblePair, std::vector<Weight>>> out;
  std::map<std::pair<long, long>, size_t> seen;
  for (int l = 0; l <= l_max; ++l) {
    for (size_t i = 0; i < gens.size(); ++i) {
      const Weight& g = gens[i];
      long a = g.plus_sum() - l;
      long b = g.minus_sum() + l;
      // generator shifted by l(eps_m - eps_{m+1}); stays dominant
      std::vector<long> e = g.entries();
      e[static_cast<size_t>(m - 1)] -= l;
      e[static_cast<size_t>(m)] += l;
      Weight shifted(std::move(e), m, n);
      auto members = strong_ideal_below(shifted);

      auto key = std::make_pair(a, b);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen[key] = out.size();
        out.push_back({AdmissiblePair{a, b, static_cast<int>(i), l},
                       std::move(members)});
      } else {
        auto& dst = out[it->second].second;
        dst.insert(dst.end(), members.begin(), members.end());
        std::sort(dst.begin(), dst.end());
        dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
      }
    }
  }
  return out;
}

std::vector<Weight> special_filtration(const std::vector<Weight>& ideal_set) {
  std::set<Weight> remaining(ideal_set.begin(), ideal_set.end());
  // the input must be downward closed under the strong order
  for (const Weight& w : remaining)
    for (const Weight& below : strong_ideal_below(w))
      if (!remaining.count(below))
        throw std::invalid_argument("special_filtration: input is not an ideal (missing " +
                                    below.str() + ")");

  std::vector<Weight> order;
  while (!remaining.empty()) {
    std::optional<Weight> pick;
    for (const Weight& w : remaining) {
      bool maximal = true;
      for (const Weight& other : remaining)
        if (!(other == w) && strong_leq(w, other)) {
          maximal = false;
          break;
        }
      if (maximal && (!pick || pick->entries() < w.entries())) pick = w;
    }
    order.push_back(*pick);
    remaining.erase(*pick);
  }
  return order;
}

namespace {

long floor_mod(long a, long q) {
  long r = a % q;
  return r < 0 ? r + q : r;
}

// largest value <= cap congruent to target mod q
long largest_congruent(long cap, long target, long q) {
  return cap - floor_mod(cap - target, q);
}

// smallest value >= floor congruent to target mod q
long smallest_congruent(long floor_v, long target, long q) {
  return floor_v + floor_mod(target - floor_v, q);
}

}  // namespace

Weight congruent_predecessor(const Weight& lambda,
                             const std::vector<long>& alpha, long q) {
  int m = lambda.m(), n = lambda.n();
  if (alpha.size() != static_cast<size_t>(m + n))
    throw std::invalid_argument("alpha length mismatch");
  if (!is_dominant(lambda))
    throw std::invalid_argument("lambda must be dominant");
  if (n < 1 || m < 1) throw std::invalid_argument("need m,n >= 1");
  long alpha_sum = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (floor_mod(alpha_sum - lambda.sum(), q) != 0)
    throw std::invalid_argument("|alpha| and |lambda| disagree mod q");

  std::vector<long> mu(static_cast<size_t>(m + n));

  // even block: greedy largest congruent values, weakly decreasing
  for (int i = 0; i < m; ++i) {
    long cap = lambda[i];
    if (i > 0) cap = std::min(cap, mu[static_cast<size_t>(i - 1)]);
    mu[static_cast<size_t>(i)] = largest_congruent(cap, alpha[static_cast<size_t>(i)], q);
  }

  // odd tail: greedy smallest congruent values, scanned upwards
  for (int j = m + n - 1; j >= m + 1; --j) {
    long floor_v = lambda[j];
    if (j < m + n - 1) floor_v = std::max(floor_v, mu[static_cast<size_t>(j + 1)]);
    mu[static_cast<size_t>(j)] = smallest_congruent(floor_v, alpha[static_cast<size_t>(j)], q);
  }

  // balancing entry, then the minimal shift t >= 0 making it dominant
  long rest = 0;
  for (int i = 0; i < m + n; ++i)
    if (i != m) rest += mu[static_cast<size_t>(i)];
  long balance0 = lambda.sum() - rest;
  long t = 0;
  if (n >= 2) {
    long need = mu[static_cast<size_t>(m + 1)] - balance0;
    if (need > 0) t = (need + q - 1) / q;
  }
  mu[static_cast<size_t>(m - 1)] -= q * t;  // shift lowers mu_m by q*t ...
  mu[static_cast<size_t>(m)] = balance0 + q * t;  // ... and raises mu_{m+1}

  return Weight(std::move(mu), m, n);
}

}  // namespace glmn
