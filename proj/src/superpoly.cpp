#include "glmn/superpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "glmn/linalg.hpp"

namespace glmn {

bool PolyContext::position_valid(int i, int j) const {
  if (i < 1 || j < 1 || i > dim() || j > dim()) return false;
  switch (kind) {
    case Coalgebra::full:
      return true;
    case Coalgebra::even:
      return (i <= m) == (j <= m);
    case Coalgebra::lower:
      return !(i <= m && j > m);
  }
  return false;
}

int Monomial::total_degree() const {
  int d = static_cast<int>(odd.size());
  for (const auto& [k, e] : even) d += e;
  return d;
}

namespace {

void check_same_context(const SuperPoly& a, const SuperPoly& b) {
  if (!(a.ctx == b.ctx)) throw std::invalid_argument("polynomial context mismatch");
}

// Sorted union of two disjoint odd-variable lists; the sign is the Koszul
// sign of sorting b's variables past a's.  Returns 0 on a repeated variable.
int merge_odd(const std::vector<VarKey>& a, const std::vector<VarKey>& b,
              std::vector<VarKey>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      crossings += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<long>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<long>(j), b.end());
  return crossings % 2 == 0 ? 1 : -1;
}

void merge_even(const std::vector<std::pair<VarKey, int>>& a,
                const std::vector<std::pair<VarKey, int>>& b,
                std::vector<std::pair<VarKey, int>>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<long>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<long>(j), b.end());
}

struct Factor {
  VarKey key;
  int exp;
  bool is_odd;
};

// Factors of a monomial in global key order (the Grassmann normal order).
std::vector<Factor> factors_of(const Monomial& m) {
  std::vector<Factor> out;
  out.reserve(m.even.size() + m.odd.size());
  size_t i = 0, j = 0;
  while (i < m.even.size() || j < m.odd.size()) {
    bool take_even = j >= m.odd.size() ||
                     (i < m.even.size() && m.even[i].first < m.odd[j]);
    if (take_even) {
      out.push_back({m.even[i].first, m.even[i].second, false});
      ++i;
    } else {
      out.push_back({m.odd[j], 1, true});
      ++j;
    }
  }
  return out;
}

int permutation_sign(const std::vector<size_t>& perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace

SuperPoly SuperPoly::constant(const PolyContext& c, const Scalar& s) {
  SuperPoly f(c);
  if (!s.is_zero()) f.terms.emplace(Monomial{}, s);
  return f;
}

SuperPoly SuperPoly::one(const PolyContext& c) {
  return constant(c, Scalar::one(c.p));
}

SuperPoly SuperPoly::variable(const PolyContext& c, int i, int j, int side) {
  if (side < 0 || side >= c.sides)
    throw std::invalid_argument("tensor side out of range");
  if (!c.position_valid(i, j))
    throw std::invalid_argument("position (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") not present in this coordinate ring");
  SuperPoly f(c);
  Monomial mono;
  VarKey k = var_key(side, i, j);
  if (c.odd(i, j))
    mono.odd.push_back(k);
  else
    mono.even.emplace_back(k, 1);
  f.terms.emplace(std::move(mono), Scalar::one(c.p));
  return f;
}

void SuperPoly::add_term(Monomial mono, Scalar coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(std::move(mono), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

int SuperPoly::parity() const {
  int par = -2;
  for (const auto& [mono, coeff] : terms) {
    if (par == -2)
      par = mono.parity();
    else if (par != mono.parity())
      return -1;
  }
  return par == -2 ? 0 : par;
}

int SuperPoly::max_term_degree() const {
  int d = 0;
  for (const auto& [mono, coeff] : terms)
    d = std::max(d, mono.total_degree());
  return d;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out = *this;
  for (auto& [mono, coeff] : out.terms) coeff = -coeff;
  return out;
}

SuperPoly lifted(const SuperPoly& f, const std::array<int, 6>& target) {
  for (int slot = 0; slot < 6; ++slot)
    if (target[slot] < f.den[slot])
      throw std::invalid_argument("cannot lower a denominator exponent");
  SuperPoly out = f;
  for (int slot = 0; slot < 6; ++slot) {
    int diff = target[slot] - out.den[slot];
    if (diff == 0) continue;
    SuperPoly det = block_det(out.ctx, slot % 2, slot / 2);
    for (int rep = 0; rep < diff; ++rep) out = out * det;
  }
  out.den = target;
  return out;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
  check_same_context(*this, o);
  std::array<int, 6> target{};
  for (int slot = 0; slot < 6; ++slot)
    target[slot] = std::max(den[slot], o.den[slot]);
  SuperPoly a = lifted(*this, target);
  SuperPoly b = lifted(o, target);
  for (auto& [mono, coeff] : b.terms) a.add_term(mono, coeff);
  return a;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const { return *this + (-o); }

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
  check_same_context(*this, o);
  SuperPoly out = zero(ctx);
  for (int slot = 0; slot < 6; ++slot) out.den[slot] = den[slot] + o.den[slot];
  std::vector<VarKey> odd;
  std::vector<std::pair<VarKey, int>> even;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      int sign = merge_odd(ma.odd, mb.odd, odd);
      if (sign == 0) continue;
      merge_even(ma.even, mb.even, even);
      Monomial mono{even, odd};
      if (mono.total_degree() > ctx.max_degree)
        throw std::overflow_error("degree guard exceeded");
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(std::move(mono), std::move(c));
    }
  return out;
}

SuperPoly SuperPoly::scaled(const Scalar& s) const {
  SuperPoly out = zero(ctx);
  out.den = den;
  if (s.is_zero()) return out;
  for (const auto& [mono, coeff] : terms) out.terms.emplace(mono, coeff * s);
  return out;
}

SuperPoly SuperPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  SuperPoly out = one(ctx);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

SuperPoly SuperPoly::numerator() const {
  SuperPoly out = *this;
  out.den = {};
  return out;
}

bool equivalent(const SuperPoly& f, const SuperPoly& g) {
  check_same_context(f, g);
  std::array<int, 6> target{};
  for (int slot = 0; slot < 6; ++slot)
    target[slot] = std::max(f.den[slot], g.den[slot]);
  return lifted(f, target).terms == lifted(g, target).terms;
}

SuperPoly embed(const SuperPoly& f, int new_sides, int offset) {
  if (offset < 0 || f.ctx.sides + offset > new_sides)
    throw std::invalid_argument("embedding does not fit the target engine");
  PolyContext oc = f.ctx;
  oc.sides = new_sides;
  SuperPoly out = SuperPoly::zero(oc);
  for (int side = 0; side < f.ctx.sides; ++side)
    for (int b = 0; b < 2; ++b)
      out.den[2 * (side + offset) + b] = f.den[2 * side + b];
  VarKey shift = var_key(offset, 0, 0);
  for (const auto& [mono, coeff] : f.terms) {
    Monomial nm;
    for (const auto& [k, e] : mono.even) nm.even.emplace_back(k + shift, e);
    for (VarKey k : mono.odd) nm.odd.push_back(k + shift);
    out.terms.emplace(std::move(nm), coeff);
  }
  return out;
}

SuperPoly block_det(const PolyContext& c, int block, int side) {
  int lo = block == 0 ? 1 : c.m + 1;
  int hi = block == 0 ? c.m : c.m + c.n;
  std::vector<long> idx;
  for (int i = lo; i <= hi; ++i) idx.push_back(i);
  return generic_minor(c, idx, idx, side);
}

SuperPoly generic_minor(const PolyContext& c, const std::vector<long>& rows,
                        const std::vector<long>& cols, int side) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs as many rows as columns");
  SuperPoly out = SuperPoly::zero(c);
  std::vector<size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SuperPoly term = SuperPoly::one(c);
    for (size_t u = 0; u < rows.size(); ++u)
      term = term * SuperPoly::variable(c, static_cast<int>(rows[u]),
                                        static_cast<int>(cols[perm[u]]), side);
    int sign = permutation_sign(perm);
    out = (sign > 0) ? out + term : out - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<SuperPoly>> adjugate_matrix(const PolyContext& c,
                                                    int block, int side) {
  int lo = block == 0 ? 1 : c.m + 1;
  int size = block == 0 ? c.m : c.n;
  std::vector<std::vector<SuperPoly>> adj(
      static_cast<size_t>(size),
      std::vector<SuperPoly>(static_cast<size_t>(size), SuperPoly::zero(c)));
  for (int k = 0; k < size; ++k)
    for (int j = 0; j < size; ++j) {
      std::vector<long> rows, cols;
      for (int t = 0; t < size; ++t) {
        if (t != j) rows.push_back(lo + t);
        if (t != k) cols.push_back(lo + t);
      }
      SuperPoly cof = generic_minor(c, rows, cols, side);
      adj[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          ((j + k) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::vector<std::vector<SuperPoly>> invert_even_block(const PolyContext& c,
                                                      int block, int side) {
  auto inv = adjugate_matrix(c, block, side);
  for (auto& row : inv)
    for (auto& entry : row) entry.den[static_cast<size_t>(2 * side + block)] += 1;
  return inv;
}

SuperPoly comultiply(const SuperPoly& f, int side) {
  const PolyContext& c = f.ctx;
  if (side < 0 || side >= c.sides)
    throw std::invalid_argument("tensor side out of range");
  if (c.sides >= 3)
    throw std::invalid_argument("at most three tensor factors supported");
  if (c.kind == Coalgebra::full &&
      (f.den[2 * side] != 0 || f.den[2 * side + 1] != 0))
    throw std::domain_error(
        "unsupported denominator pattern under comultiplication");

  PolyContext oc = c;
  oc.sides = c.sides + 1;

  std::map<std::pair<int, int>, SuperPoly> images;
  auto delta_var = [&](int i, int j) -> const SuperPoly& {
    auto it = images.find({i, j});
    if (it != images.end()) return it->second;
    SuperPoly img = SuperPoly::zero(oc);
    for (int k = 1; k <= c.dim(); ++k) {
      if (!c.position_valid(i, k) || !c.position_valid(k, j)) continue;
      img += SuperPoly::variable(oc, i, k, side) *
             SuperPoly::variable(oc, k, j, side + 1);
    }
    return images.emplace(std::make_pair(i, j), std::move(img)).first->second;
  };

  SuperPoly out = SuperPoly::zero(oc);
  for (const auto& [mono, coeff] : f.terms) {
    SuperPoly acc = SuperPoly::constant(oc, coeff);
    for (const Factor& fac : factors_of(mono)) {
      int fs = key_side(fac.key), i = key_row(fac.key), j = key_col(fac.key);
      SuperPoly img = SuperPoly::zero(oc);
      if (fs == side) {
        img = delta_var(i, j);
        if (fac.exp > 1) img = img.pow(fac.exp);
      } else {
        int ns = fs > side ? fs + 1 : fs;
        img = SuperPoly::variable(oc, i, j, ns);
        if (fac.exp > 1) img = img.pow(fac.exp);
      }
      acc = acc * img;
    }
    out += acc;
  }

  // group-like determinants: a denominator on the comultiplied side lands on
  // both of its children
  std::array<int, 6> od{};
  for (int s = 0; s < c.sides; ++s)
    for (int b = 0; b < 2; ++b) {
      int d = f.den[static_cast<size_t>(2 * s + b)];
      if (d == 0) continue;
      if (s < side) {
        od[static_cast<size_t>(2 * s + b)] += d;
      } else if (s == side) {
        od[static_cast<size_t>(2 * s + b)] += d;
        od[static_cast<size_t>(2 * (s + 1) + b)] += d;
      } else {
        od[static_cast<size_t>(2 * (s + 1) + b)] += d;
      }
    }
  out.den = od;
  return out;
}

SuperPoly counit_side(const SuperPoly& f, int side) {
  const PolyContext& c = f.ctx;
  if (c.sides < 2) throw std::invalid_argument("counit needs a tensor factor to contract");
  if (side < 0 || side >= c.sides)
    throw std::invalid_argument("tensor side out of range");
  PolyContext oc = c;
  oc.sides = c.sides - 1;
  SuperPoly out = SuperPoly::zero(oc);
  for (int s = 0; s < c.sides; ++s) {
    if (s == side) continue;
    int ns = s > side ? s - 1 : s;
    for (int b = 0; b < 2; ++b)
      out.den[static_cast<size_t>(2 * ns + b)] = f.den[static_cast<size_t>(2 * s + b)];
  }
  VarKey down = var_key(1, 0, 0);
  for (const auto& [mono, coeff] : f.terms) {
    bool dead = false;
    Monomial nm;
    for (const auto& [k, e] : mono.even) {
      if (key_side(k) == side) {
        if (key_row(k) != key_col(k)) {
          dead = true;
          break;
        }
        continue;  // epsilon(x_ii) = 1
      }
      nm.even.emplace_back(key_side(k) > side ? k - down : k, e);
    }
    if (!dead)
      for (VarKey k : mono.odd) {
        if (key_side(k) == side) {
          dead = true;  // odd variables are off-diagonal
          break;
        }
        nm.odd.push_back(key_side(k) > side ? k - down : k);
      }
    if (!dead) out.add_term(std::move(nm), coeff);
  }
  return out;
}

namespace {

// Images of the Y-variables under phi^*, in the localized X-engine.
class PhiImages {
 public:
  explicit PhiImages(const PolyContext& xc)
      : xc_(xc), inv11_(invert_even_block(xc, 0)) {}

  const SuperPoly& image(int i, int j) {
    auto it = cache_.find({i, j});
    if (it != cache_.end()) return it->second;
    SuperPoly img = compute(i, j);
    return cache_.emplace(std::make_pair(i, j), std::move(img)).first->second;
  }

  // det(X22 - X21 X11^-1 X12), the image of det(Y22)
  SuperPoly schur_det() {
    int m = xc_.m, n = xc_.n;
    SuperPoly out = SuperPoly::zero(xc_);
    std::vector<size_t> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      SuperPoly term = SuperPoly::one(xc_);
      for (int u = 0; u < n; ++u)
        term = term * image(m + 1 + u, m + 1 + static_cast<int>(perm[static_cast<size_t>(u)]));
      int sign = permutation_sign(perm);
      out = (sign > 0) ? out + term : out - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  // 1/det(X22 - X21 X11^-1 X12) via the finite geometric series around
  // det(X22): the correction is nilpotent (every term carries odd variables).
  SuperPoly schur_det_inverse() {
    SuperPoly detS = schur_det();
    SuperPoly det22 = block_det(xc_, 1);
    SuperPoly nil = detS - det22;
    SuperPoly acc = SuperPoly::zero(xc_);
    SuperPoly power = SuperPoly::one(xc_);
    int k = 0;
    int bound = xc_.m * xc_.n + 1;
    while (!power.is_zero()) {
      SuperPoly term = power;
      term.den[1] += k + 1;
      acc = (k % 2 == 0) ? acc + term : acc - term;
      power = power * nil;
      if (++k > bound)
        throw std::logic_error("nilpotent expansion failed to terminate");
    }
    return acc;
  }

 private:
  SuperPoly compute(int i, int j) {
    int m = xc_.m;
    if (i <= m && j <= m) return SuperPoly::variable(xc_, i, j);
    if (i > m && j <= m) {
      SuperPoly acc = SuperPoly::zero(xc_);
      for (int k = 1; k <= m; ++k)
        acc += SuperPoly::variable(xc_, i, k) *
               inv11_[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
      return acc;
    }
    if (i <= m && j > m) {
      SuperPoly acc = SuperPoly::zero(xc_);
      for (int k = 1; k <= m; ++k)
        acc += inv11_[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] *
               SuperPoly::variable(xc_, k, j);
      return acc;
    }
    SuperPoly acc = SuperPoly::variable(xc_, i, j);
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l)
        acc -= SuperPoly::variable(xc_, i, k) *
               inv11_[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)] *
               SuperPoly::variable(xc_, l, j);
    return acc;
  }

  PolyContext xc_;
  std::vector<std::vector<SuperPoly>> inv11_;
  std::map<std::pair<int, int>, SuperPoly> cache_;
};

}  // namespace

SuperPoly phi_star(const SuperPoly& f) {
  if (f.ctx.sides != 1)
    throw std::invalid_argument("phi_star acts on single-factor polynomials");
  PolyContext xc = f.ctx;
  xc.letter = 'x';
  xc.kind = Coalgebra::full;
  PhiImages images(xc);

  SuperPoly out = SuperPoly::zero(xc);
  for (const auto& [mono, coeff] : f.terms) {
    SuperPoly acc = SuperPoly::constant(xc, coeff);
    for (const Factor& fac : factors_of(mono)) {
      SuperPoly img = images.image(key_row(fac.key), key_col(fac.key));
      if (fac.exp > 1) img = img.pow(fac.exp);
      acc = acc * img;
    }
    out += acc;
  }
  if (f.den[0] > 0) out.den[0] += f.den[0];  // det(Y11) maps to det(X11)
  if (f.den[1] > 0) out = out * images.schur_det_inverse().pow(f.den[1]);
  return out;
}

SuperPoly z_element(const PolyContext& c, int i, int j) {
  if (!(i > c.m && i <= c.dim() && j >= 1 && j <= c.m))
    throw std::invalid_argument("z_ij needs m < i <= m+n and j <= m");
  auto inv11 = invert_even_block(c, 0);
  SuperPoly acc = SuperPoly::zero(c);
  for (int k = 1; k <= c.m; ++k)
    acc += SuperPoly::variable(c, i, k) *
           inv11[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
  return acc;
}

namespace {

// Splits a two-sided monomial into its side-0 and side-1 parts.  The global
// normal order already lists side 0 before side 1, so no sign appears.
std::pair<Monomial, Monomial> split_sides(const Monomial& mono) {
  Monomial left, right;
  VarKey down = var_key(1, 0, 0);
  for (const auto& [k, e] : mono.even) {
    if (key_side(k) == 0)
      left.even.emplace_back(k, e);
    else
      right.even.emplace_back(k - down, e);
  }
  for (VarKey k : mono.odd) {
    if (key_side(k) == 0)
      left.odd.push_back(k);
    else
      right.odd.push_back(k - down);
  }
  return {std::move(left), std::move(right)};
}

}  // namespace

LMembershipResult l_membership(const SuperPoly& tensor_fraction) {
  const PolyContext& tc = tensor_fraction.ctx;
  if (tc.sides != 2)
    throw std::invalid_argument("l_membership expects a two-sided element");
  if (tensor_fraction.den[1] != 0)
    throw std::domain_error("left det(B22) denominators unsupported");
  int dl = tensor_fraction.den[0];
  if (dl > 3) throw std::overflow_error("degree guard exceeded");

  PolyContext side_ctx = tc;
  side_ctx.sides = 1;

  LMembershipResult result;
  if (dl == 0) {
    result.member = tensor_fraction.is_zero();
    return result;
  }

  // L-variable numerators y_uv adj(Y11)_st over det(Y11)
  auto adj = adjugate_matrix(side_ctx, 0);
  std::vector<SuperPoly> lvars;
  for (int u = tc.m + 1; u <= tc.dim(); ++u)
    for (int v = tc.m + 1; v <= tc.dim(); ++v)
      for (int s = 1; s <= tc.m; ++s)
        for (int t = 1; t <= tc.m; ++t)
          lvars.push_back(SuperPoly::variable(side_ctx, u, v) *
                          adj[static_cast<size_t>(s - 1)][static_cast<size_t>(t - 1)]);

  // candidates: products of 1..dl L-variables, padded by det(Y11)^(dl - count)
  SuperPoly det11 = block_det(side_ctx, 0);
  std::vector<SuperPoly> candidates;
  std::vector<size_t> pick;
  auto build = [&](auto&& self, size_t start, int count) -> void {
    if (count >= 1) {
      SuperPoly c = SuperPoly::one(side_ctx);
      for (size_t idx : pick) c = c * lvars[idx];
      for (int pad = count; pad < dl; ++pad) c = c * det11;
      if (!c.is_zero()) candidates.push_back(std::move(c));
    }
    if (count == dl) return;
    for (size_t idx = start; idx < lvars.size(); ++idx) {
      pick.push_back(idx);
      self(self, idx, count + 1);
      pick.pop_back();
    }
  };
  build(build, 0, 0);

  for (const auto& c : candidates)
    result.truncation_degree = std::max(result.truncation_degree, c.max_term_degree());

  // columns of the numerator, indexed by right monomials
  SuperPoly numerator = tensor_fraction.numerator();
  std::map<Monomial, size_t> row_index;
  auto row_of = [&](const Monomial& mono) {
    auto it = row_index.find(mono);
    if (it != row_index.end()) return it->second;
    size_t idx = row_index.size();
    row_index.emplace(mono, idx);
    return idx;
  };
  for (const auto& c : candidates)
    for (const auto& [mono, coeff] : c.terms) row_of(mono);
  std::map<Monomial, std::map<size_t, Scalar>> columns;
  for (const auto& [mono, coeff] : numerator.terms) {
    auto [left, right] = split_sides(mono);
    columns[right][row_of(left)] = coeff;
  }

  size_t nrows = row_index.size();
  Matrix a(nrows, std::vector<Scalar>(candidates.size(), Scalar::zero(tc.p)));
  for (size_t cidx = 0; cidx < candidates.size(); ++cidx)
    for (const auto& [mono, coeff] : candidates[cidx].terms)
      a[row_index.at(mono)][cidx] = coeff;

  std::vector<SuperPoly> cofactors(candidates.size(), SuperPoly::zero(tc));
  for (const auto& [right, col] : columns) {
    std::vector<Scalar> b(nrows, Scalar::zero(tc.p));
    for (const auto& [ridx, coeff] : col) b[ridx] = coeff;
    auto x = gauss_solve(a, b);
    if (!x) {
      result.member = false;
      result.expansion.clear();
      return result;
    }
    for (size_t cidx = 0; cidx < candidates.size(); ++cidx) {
      if ((*x)[cidx].is_zero()) continue;
      SuperPoly rp = SuperPoly::zero(tc);
      Monomial shifted;
      VarKey up = var_key(1, 0, 0);
      for (const auto& [k, e] : right.even) shifted.even.emplace_back(k + up, e);
      for (VarKey k : right.odd) shifted.odd.push_back(k + up);
      rp.add_term(std::move(shifted), (*x)[cidx]);
      cofactors[cidx] += rp;
    }
  }

  // certificate check: the claimed expansion reproduces the numerator
  SuperPoly rebuilt = SuperPoly::zero(tc);
  for (size_t cidx = 0; cidx < candidates.size(); ++cidx) {
    if (cofactors[cidx].is_zero()) continue;
    rebuilt += embed(candidates[cidx], 2, 0) * cofactors[cidx];
    result.expansion.emplace_back(candidates[cidx], cofactors[cidx]);
  }
  result.member = (rebuilt - numerator).is_zero();
  if (!result.member) result.expansion.clear();
  return result;
}

LMembershipResult check_invariant_mod_L(int m, int n, long p, int i, int j) {
  PolyContext yc{m, n, p, 'y', Coalgebra::lower, 1};
  if (!(i > m && i <= m + n && j >= 1 && j <= m))
    throw std::invalid_argument("need an odd position of the 21 block");
  SuperPoly z = z_element(yc, i, j);
  SuperPoly delta_z = comultiply(z, 0);
  SuperPoly z_tensor_one = embed(z, 2, 0);
  return l_membership(delta_z - z_tensor_one);
}

std::string to_string(const SuperPoly& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  auto var_name = [&](VarKey k) {
    std::string s = std::string(1, f.ctx.letter) + std::to_string(key_row(k)) +
                    std::to_string(key_col(k));
    for (int q = 0; q < key_side(k); ++q) s += '\'';
    return s;
  };
  for (const auto& [mono, coeff] : f.terms) {
    std::string cs = coeff.str();
    os << (cs[0] == '-' ? "" : "+") << cs;
    for (const Factor& fac : factors_of(mono)) {
      os << '*' << var_name(fac.key);
      if (fac.exp > 1) os << '^' << fac.exp;
    }
    for (int slot = 0; slot < 6; ++slot) {
      if (f.den[static_cast<size_t>(slot)] == 0) continue;
      os << "*D" << (slot % 2 + 1);
      for (int q = 0; q < slot / 2; ++q) os << '\'';
      os << "^-" << f.den[static_cast<size_t>(slot)];
    }
  }
  return os.str();
}

}  // namespace glmn
