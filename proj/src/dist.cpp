#include "glmn/dist.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glmn {

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!out.empty()) out += " ";
    out += "v" + std::to_string(v[i]);
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (!out.empty()) out += " ";
    out += "w" + std::to_string(w[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<long> word_weight(const DistContext& c, const Word& word) {
  std::vector<long> mu(static_cast<size_t>(c.dim()), 0);
  for (std::uint8_t k : word.v) mu[static_cast<size_t>(k - 1)] += 1;
  for (std::uint8_t k : word.w) mu[static_cast<size_t>(k - 1)] -= 1;
  return mu;
}

TensorVec TensorVec::basis(const DistContext& c, Word word) {
  TensorVec x(c);
  x.terms.emplace(std::move(word), Scalar::one(c.p));
  return x;
}

void TensorVec::add_term(Word word, Scalar coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(word);
  if (it == terms.end()) {
    terms.emplace(std::move(word), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorVec TensorVec::operator+(const TensorVec& o) const {
  TensorVec out = *this;
  for (const auto& [word, coeff] : o.terms) out.add_term(word, coeff);
  return out;
}

TensorVec TensorVec::operator-(const TensorVec& o) const {
  TensorVec out = *this;
  for (const auto& [word, coeff] : o.terms) out.add_term(word, -coeff);
  return out;
}

TensorVec TensorVec::scaled(const Scalar& s) const {
  TensorVec out(ctx);
  if (s.is_zero()) return out;
  for (const auto& [word, coeff] : terms) out.terms.emplace(word, coeff * s);
  return out;
}

bool TensorVec::operator==(const TensorVec& o) const { return terms == o.terms; }

namespace {

// slots of a word hit by e_ij: v-slots holding letter j (v_j -> v_i) and
// w-slots holding letter i (w_i -> -w_j)
struct Slot {
  bool in_w = false;
  size_t pos = 0;
};

std::vector<Slot> applicable_slots(int i, int j, const Word& word) {
  std::vector<Slot> out;
  for (size_t s = 0; s < word.v.size(); ++s)
    if (word.v[s] == j) out.push_back({false, s});
  for (size_t s = 0; s < word.w.size(); ++s)
    if (word.w[s] == i) out.push_back({true, s});
  return out;
}

int letter_parity(const DistContext& c, const Word& word, const Slot& slot) {
  std::uint8_t letter = slot.in_w ? word.w[slot.pos] : word.v[slot.pos];
  return c.odd_letter(letter) ? 1 : 0;
}

// parity of all letters strictly before the slot in the full word
int prefix_parity(const DistContext& c, const Word& word, const Slot& slot) {
  int par = 0;
  size_t upto_v = slot.in_w ? word.v.size() : slot.pos;
  for (size_t s = 0; s < upto_v; ++s)
    par ^= c.odd_letter(word.v[s]) ? 1 : 0;
  if (slot.in_w)
    for (size_t s = 0; s < slot.pos; ++s)
      par ^= c.odd_letter(word.w[s]) ? 1 : 0;
  return par;
}

void replace_letter(Word& word, const Slot& slot, int target) {
  if (slot.in_w)
    word.w[slot.pos] = static_cast<std::uint8_t>(target);
  else
    word.v[slot.pos] = static_cast<std::uint8_t>(target);
}

}  // namespace

TensorVec apply_E(const DistContext& c, int i, int j, int t, const TensorVec& x) {
  if (i == j || i < 1 || j < 1 || i > c.dim() || j > c.dim())
    throw std::invalid_argument("need off-diagonal matrix position");
  if (t < 1) throw std::invalid_argument("divided power needs t >= 1");
  bool odd = c.odd_letter(i) != c.odd_letter(j);
  if (odd && t > 1)
    throw std::invalid_argument("odd e_ij admits no divided power beyond t = 1");

  TensorVec out(c);
  for (const auto& [word, coeff] : x.terms) {
    auto slots = applicable_slots(i, j, word);
    if (odd) {
      for (const Slot& slot : slots) {
        Word nw = word;
        replace_letter(nw, slot, slot.in_w ? j : i);
        Scalar s = coeff;
        if (prefix_parity(c, word, slot)) s = -s;
        if (slot.in_w) s = -s;  // e_ij . w_i = -w_j
        out.add_term(std::move(nw), std::move(s));
      }
      continue;
    }
    // even: the divided power spreads t single actions over distinct slots
    if (static_cast<size_t>(t) > slots.size()) continue;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
      if (pick.size() == static_cast<size_t>(t)) {
        Word nw = word;
        int wcount = 0;
        for (size_t idx : pick) {
          replace_letter(nw, slots[idx], slots[idx].in_w ? j : i);
          if (slots[idx].in_w) ++wcount;
        }
        Scalar s = coeff;
        if (wcount % 2) s = -s;
        out.add_term(std::move(nw), std::move(s));
        return;
      }
      for (size_t idx = start; idx < slots.size(); ++idx) {
        pick.push_back(idx);
        self(self, idx + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

namespace {

TensorVec apply_diagonal(const DistContext& c, const TensorVec& x,
                         const std::function<Scalar(const std::vector<long>&)>& value) {
  TensorVec out(c);
  for (const auto& [word, coeff] : x.terms)
    out.add_term(word, coeff * value(word_weight(c, word)));
  return out;
}

void require_char_p(const DistContext& c, long q) {
  if (c.p == 0)
    throw std::invalid_argument("Frobenius idempotents need characteristic p");
  if (prime_radical(q) != c.p)
    throw std::invalid_argument("q must be a power of the field characteristic");
}

}  // namespace

TensorVec apply_binom(const DistContext& c, int i, long s, const TensorVec& x) {
  if (s < 0) throw std::invalid_argument("binom(e_i, s) needs s >= 0");
  return apply_diagonal(c, x, [&](const std::vector<long>& mu) {
    long mi = mu[static_cast<size_t>(i - 1)];
    if (c.p > 0) return binom_mod_p(mi, static_cast<unsigned long>(s), c.p);
    return Scalar::rational(mpq_class(binom_int(mi, static_cast<unsigned long>(s))));
  });
}

TensorVec apply_hq(const DistContext& c, const std::vector<long>& alpha, long q,
                   const TensorVec& x) {
  require_char_p(c, q);
  if (alpha.size() != static_cast<size_t>(c.dim()))
    throw std::invalid_argument("alpha length mismatch");
  return apply_diagonal(
      c, x, [&](const std::vector<long>& mu) { return h_weight(alpha, q, mu); });
}

TensorVec apply_hq_coord(const DistContext& c, int i, long a, long q,
                         const TensorVec& x) {
  require_char_p(c, q);
  return apply_diagonal(c, x, [&](const std::vector<long>& mu) {
    return h_closed(a, q, mu[static_cast<size_t>(i - 1)]);
  });
}

TensorVec apply_h0(const DistContext& c, long l, const TensorVec& x) {
  if (c.p != 0)
    throw std::invalid_argument("h_l = sum e_i - l lives in characteristic 0");
  return apply_diagonal(c, x, [&](const std::vector<long>& mu) {
    long total = std::accumulate(mu.begin(), mu.end(), 0L);
    return Scalar::rational(mpq_class(total - l));
  });
}

TensorVec apply_word(const DistContext& c, const OperatorWord& ops,
                     const TensorVec& x) {
  TensorVec cur = x;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    cur = std::visit(
        [&](const auto& op) -> TensorVec {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, OpE>)
            return apply_E(c, op.i, op.j, op.t, cur);
          else if constexpr (std::is_same_v<T, OpBinom>)
            return apply_binom(c, op.i, op.s, cur);
          else if constexpr (std::is_same_v<T, OpHq>)
            return apply_hq(c, op.alpha, op.q, cur);
          else if constexpr (std::is_same_v<T, OpHqCoord>)
            return apply_hq_coord(c, op.i, op.a, op.q, cur);
          else
            return apply_h0(c, op.l, cur);
        },
        *it);
  }
  return cur;
}

void for_each_word(const DistContext& c, int a, int b,
                   const std::function<void(const Word&)>& fn) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative tensor power");
  Word word;
  word.v.assign(static_cast<size_t>(a), 1);
  word.w.assign(static_cast<size_t>(b), 1);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == static_cast<size_t>(a + b)) {
      fn(word);
      return;
    }
    bool in_w = pos >= static_cast<size_t>(a);
    size_t idx = in_w ? pos - static_cast<size_t>(a) : pos;
    for (int letter = 1; letter <= c.dim(); ++letter) {
      (in_w ? word.w[idx] : word.v[idx]) = static_cast<std::uint8_t>(letter);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::optional<Word> check_commutation_clause(const DistContext& c, int clause,
                                             int s, int i, int j, int t, long a,
                                             long q, int pow_v, int pow_w) {
  require_char_p(c, q);
  long target = a;
  if (clause == 2) {
    s = i;
    target = ((a - t) % q + q) % q;
  } else if (clause == 3) {
    s = j;
    target = ((a + t) % q + q) % q;
  } else if (clause == 1) {
    if (s == i || s == j)
      throw std::invalid_argument("clause 1 needs s distinct from i and j");
  } else {
    throw std::invalid_argument("clause must be 1, 2 or 3");
  }

  std::optional<Word> counterexample;
  for_each_word(c, pow_v, pow_w, [&](const Word& word) {
    if (counterexample) return;
    TensorVec x = TensorVec::basis(c, word);
    TensorVec lhs = apply_hq_coord(c, s, a, q, apply_E(c, i, j, t, x));
    TensorVec rhs = apply_E(c, i, j, t, apply_hq_coord(c, s, target, q, x));
    if (!(lhs == rhs)) counterexample = word;
  });
  return counterexample;
}

bool kernel_annihilation(const DistContext& c, long l, long q,
                         const std::vector<long>& alpha, int k_max) {
  require_char_p(c, q);
  long asum = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (((asum - l) % q + q) % q == 0)
    throw std::invalid_argument("|alpha| = l (mod q): not a kernel candidate");
  bool ok = true;
  int k_lo = static_cast<int>(std::max(0L, -l));
  for (int k = k_lo; k <= k_max && ok; ++k)
    for_each_word(c, static_cast<int>(l) + k, k, [&](const Word& word) {
      if (!ok) return;
      if (!apply_hq(c, alpha, q, TensorVec::basis(c, word)).is_zero()) ok = false;
    });
  return ok;
}

std::string DistMonomialPair::str() const {
  std::string out;
  auto emit = [&](const std::map<std::pair<int, int>, int>& part) {
    for (const auto& [pos, t] : part) {
      if (!out.empty()) out += " ";
      out += "e" + std::to_string(pos.first) + std::to_string(pos.second);
      if (t > 1) out += "^" + std::to_string(t);
    }
  };
  emit(upper);
  emit(lower);
  return out.empty() ? "1" : out;
}

namespace {

long monomial_height(const std::map<std::pair<int, int>, int>& part) {
  long h = 0;
  for (const auto& [pos, t] : part) h += static_cast<long>(t) * (pos.first - pos.second);
  return h;
}

long exponent_sum(const std::map<std::pair<int, int>, int>& part) {
  long t = 0;
  for (const auto& [pos, e] : part) t += e;
  return t;
}

void validate_monomial_pair(const DistContext& c, const DistMonomialPair& u) {
  for (const auto& [pos, t] : u.upper) {
    if (!(pos.first < pos.second) || pos.first < 1 || pos.second > c.dim())
      throw std::invalid_argument("upper part needs positions i < j");
    bool odd = c.odd_letter(pos.first) != c.odd_letter(pos.second);
    if (t < 1 || (odd && t > 1))
      throw std::invalid_argument("bad exponent in monomial element");
  }
  for (const auto& [pos, t] : u.lower) {
    if (!(pos.first > pos.second) || pos.second < 1 || pos.first > c.dim())
      throw std::invalid_argument("lower part needs positions i > j");
    bool odd = c.odd_letter(pos.first) != c.odd_letter(pos.second);
    if (t < 1 || (odd && t > 1))
      throw std::invalid_argument("bad exponent in monomial element");
  }
}

// Product over one triangle, row-major order, rightmost factor first.
TensorVec apply_triangle(const DistContext& c,
                         const std::map<std::pair<int, int>, int>& part,
                         const TensorVec& x) {
  TensorVec cur = x;
  for (auto it = part.rbegin(); it != part.rend(); ++it)
    cur = apply_E(c, it->first.first, it->first.second, it->second, cur);
  return cur;
}

long upper_colsum(const DistMonomialPair& u, int col) {
  long t = 0;
  for (const auto& [pos, e] : u.upper)
    if (pos.second == col) t += e;
  return t;
}

long lower_rowsum(const DistMonomialPair& u, int row) {
  long t = 0;
  for (const auto& [pos, e] : u.lower)
    if (pos.first == row) t += e;
  return t;
}

}  // namespace

WitnessOutcome kernel_witness(const DistContext& c,
                              const std::vector<DistMonomialPair>& summands,
                              const std::vector<long>& alpha, long q, long l) {
  require_char_p(c, q);
  if (summands.empty()) throw std::invalid_argument("empty element");
  for (const auto& u : summands) validate_monomial_pair(c, u);
  for (size_t a = 0; a < summands.size(); ++a)
    for (size_t b = a + 1; b < summands.size(); ++b)
      if (summands[a] == summands[b])
        throw std::invalid_argument("summands must be distinct monomials");
  if (alpha.size() != static_cast<size_t>(c.dim()))
    throw std::invalid_argument("alpha length mismatch");
  for (long av : alpha)
    if (av < 0 || av >= q) throw std::invalid_argument("alpha entries must lie in [0,q)");
  long asum = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (((asum - l) % q + q) % q != 0)
    throw std::invalid_argument("need |alpha| = l (mod q)");

  // summand of minimal upper height drives the construction
  size_t chosen = 0;
  for (size_t s = 1; s < summands.size(); ++s)
    if (monomial_height(summands[s].upper) <
        monomial_height(summands[chosen].upper))
      chosen = s;
  const DistMonomialPair& u = summands[chosen];
  long t_plus = exponent_sum(u.upper);
  long t_minus = exponent_sum(u.lower);
  int k = static_cast<int>(std::max({t_minus, t_plus - l, 0L}));

  std::vector<long> beta(static_cast<size_t>(c.dim()));
  for (int pos = 1; pos <= c.dim(); ++pos) {
    long offset = upper_colsum(u, pos) - lower_rowsum(u, pos);
    if (pos == 1) offset += l - t_plus + t_minus;
    long need = alpha[static_cast<size_t>(pos - 1)] - offset;
    beta[static_cast<size_t>(pos - 1)] = ((need % q) + q) % q;
  }

  Word z;
  for (long r = 0; r < l + k - t_plus; ++r) z.v.push_back(1);
  for (int pos = 1; pos <= c.dim(); ++pos) {
    long count = beta[static_cast<size_t>(pos - 1)] + upper_colsum(u, pos);
    for (long r = 0; r < count; ++r) z.v.push_back(static_cast<std::uint8_t>(pos));
  }
  for (long r = 0; r < k - t_minus; ++r) z.w.push_back(1);
  for (int pos = 1; pos <= c.dim(); ++pos) {
    long count = lower_rowsum(u, pos);
    for (long r = 0; r < count; ++r) z.w.push_back(static_cast<std::uint8_t>(pos));
  }

  TensorVec zvec = TensorVec::basis(c, z);
  if (!(apply_hq(c, alpha, q, zvec) == zvec))
    throw std::logic_error("witness construction failed: h_alpha does not fix z");

  TensorVec image(c);
  for (const auto& s : summands)
    image = image + apply_triangle(c, s.upper, apply_triangle(c, s.lower, zvec));
  if (image.is_zero()) {
    std::ostringstream os;
    os << "kernel witness vanished (would falsify the kernel theorem): u =";
    for (const auto& s : summands) os << " [" << s.str() << "]";
    os << ", z = " << z.str();
    throw std::runtime_error(os.str());
  }
  return {k, std::move(beta), std::move(z), std::move(image)};
}

bool DiagPoly::is_zero() const {
  for (const auto& [expo, coeff] : coeffs)
    if (coeff != 0) return false;
  return true;
}

mpq_class DiagPoly::eval(const std::vector<long>& mu) const {
  mpq_class total = 0;
  for (const auto& [expo, coeff] : coeffs) {
    if (expo.size() > mu.size())
      throw std::invalid_argument("diagonal polynomial has too many variables");
    mpq_class term = coeff;
    for (size_t i = 0; i < expo.size(); ++i)
      for (long e = 0; e < expo[i]; ++e) term *= mu[i];
    total += term;
  }
  return total;
}

std::string DiagPoly::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [expo, coeff] : coeffs) {
    if (!out.empty()) out += " + ";
    out += coeff.get_str();
    for (size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] == 0) continue;
      out += "*e" + std::to_string(i + 1);
      if (expo[i] > 1) out += "^" + std::to_string(expo[i]);
    }
  }
  return out;
}

bool char0_annihilation(const DistContext& c, long l, int k_max) {
  if (c.p != 0) throw std::invalid_argument("characteristic 0 only");
  bool ok = true;
  int k_lo = static_cast<int>(std::max(0L, -l));
  for (int k = k_lo; k <= k_max && ok; ++k)
    for_each_word(c, static_cast<int>(l) + k, k, [&](const Word& word) {
      if (!ok) return;
      if (!apply_h0(c, l, TensorVec::basis(c, word)).is_zero()) ok = false;
    });
  return ok;
}

Char0WitnessOutcome char0_witness(const DistContext& c,
                                  const std::vector<Char0Summand>& summands,
                                  long l) {
  if (c.p != 0) throw std::invalid_argument("characteristic 0 only");
  if (summands.empty()) throw std::invalid_argument("empty element");
  for (const auto& s : summands) {
    validate_monomial_pair(c, s.ops);
    if (s.g.is_zero())
      throw std::invalid_argument("diagonal polynomial part must be nonzero");
  }
  for (size_t a = 0; a < summands.size(); ++a)
    for (size_t b = a + 1; b < summands.size(); ++b)
      if (summands[a].ops == summands[b].ops)
        throw std::invalid_argument("summands must have distinct monomial parts");

  size_t chosen = 0;
  for (size_t s = 1; s < summands.size(); ++s)
    if (monomial_height(summands[s].ops.upper) <
        monomial_height(summands[chosen].ops.upper))
      chosen = s;
  const DistMonomialPair& u = summands[chosen].ops;
  const DiagPoly& g = summands[chosen].g;
  long t_plus = exponent_sum(u.upper);
  long t_minus = exponent_sum(u.lower);
  int k = static_cast<int>(std::max({t_minus, t_plus - l, 0L}));

  int vars = c.dim() - 1;
  long degree = 0;
  for (const auto& [expo, coeff] : g.coeffs)
    degree = std::max(degree, std::accumulate(expo.begin(), expo.end(), 0L));

  auto build_word = [&](const std::vector<long>& shifts) {
    long total_shift = std::accumulate(shifts.begin(), shifts.end(), 0L);
    Word z;
    for (long r = 0; r < l + k - t_plus; ++r) z.v.push_back(1);
    for (int pos = 1; pos <= c.dim(); ++pos) {
      long count = upper_colsum(u, pos) + (pos <= vars ? shifts[static_cast<size_t>(pos - 1)] : 0);
      for (long r = 0; r < count; ++r) z.v.push_back(static_cast<std::uint8_t>(pos));
    }
    for (long r = 0; r < k - t_minus; ++r) z.w.push_back(1);
    for (int pos = 1; pos < c.dim(); ++pos) {
      long count = lower_rowsum(u, pos);
      for (long r = 0; r < count; ++r) z.w.push_back(static_cast<std::uint8_t>(pos));
    }
    for (long r = 0; r < lower_rowsum(u, c.dim()) + total_shift; ++r)
      z.w.push_back(static_cast<std::uint8_t>(c.dim()));
    return z;
  };

  // search a grid of strictly decreasing positive shifts N_1 > ... > N_vars
  // until the diagonal polynomial is nonzero at the weight of z
  std::vector<long> shifts(static_cast<size_t>(vars), 0);
  Word z;
  bool found = false;
  for (long width = degree + 2; width <= degree + 6 && !found; ++width) {
    std::vector<long> delta(static_cast<size_t>(vars), 1);
    auto next = [&]() {
      for (size_t i = 0; i < delta.size(); ++i) {
        if (delta[i] < width) {
          ++delta[i];
          for (size_t j = 0; j < i; ++j) delta[j] = 1;
          return true;
        }
      }
      return false;
    };
    do {
      for (int i = vars - 1; i >= 0; --i)
        shifts[static_cast<size_t>(i)] =
            delta[static_cast<size_t>(i)] +
            (i + 1 < vars ? shifts[static_cast<size_t>(i + 1)] : 0);
      Word candidate = build_word(shifts);
      std::vector<long> mu = word_weight(c, candidate);
      mu.resize(static_cast<size_t>(vars));
      if (g.eval(mu) != 0) {
        z = std::move(candidate);
        found = true;
        break;
      }
    } while (next());
  }
  if (!found)
    throw std::logic_error("no admissible shifts found for a nonzero polynomial");

  // sanity: z lives in V^(l+k') (x) W^(k')
  if (static_cast<long>(z.v.size()) - static_cast<long>(z.w.size()) != l)
    throw std::logic_error("witness word left the degree-l module family");

  TensorVec zvec = TensorVec::basis(c, z);
  std::vector<long> mu = word_weight(c, z);
  std::vector<long> mu_head(mu.begin(), mu.end() - 1);

  TensorVec image(c);
  for (const auto& s : summands) {
    Scalar gval = Scalar::rational(s.g.eval(mu_head));
    image = image +
            apply_triangle(c, s.ops.upper, apply_triangle(c, s.ops.lower, zvec))
                .scaled(gval);
  }
  if (image.is_zero()) {
    std::ostringstream os;
    os << "char-0 witness vanished (would falsify the kernel theorem): z = "
       << z.str();
    throw std::runtime_error(os.str());
  }
  return {k, std::move(shifts), std::move(z), std::move(image)};
}

}  // namespace glmn
