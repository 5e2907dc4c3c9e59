#include "glmn/bidet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "glmn/linalg.hpp"

namespace glmn {

PolyContext even_context(int m, int n, long p) {
  return PolyContext{m, n, p, 'y', Coalgebra::even, 1};
}

namespace {

void check_block_tuple(const PolyContext& c, int block, const std::vector<long>& idx) {
  long lo = block == 0 ? 1 : c.m + 1;
  long hi = block == 0 ? c.m : c.m + c.n;
  for (long v : idx)
    if (v < lo || v > hi) throw std::out_of_range("index outside the block");
}

bool strictly_increasing(const std::vector<long>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

}  // namespace

SuperPoly minor_det(const PolyContext& c, int block, const std::vector<long>& rows,
                    const std::vector<long>& cols) {
  if (rows.size() != cols.size())
    throw std::out_of_range("minor needs as many rows as columns");
  check_block_tuple(c, block, rows);
  check_block_tuple(c, block, cols);
  return generic_minor(c, rows, cols);
}

SuperPoly trace_formula(const PolyContext& c, int block, const std::vector<long>& rows,
                        const std::vector<long>& cols) {
  if (!strictly_increasing(rows) || !strictly_increasing(cols))
    throw std::invalid_argument("trace_formula needs strictly increasing tuples");
  check_block_tuple(c, block, rows);
  check_block_tuple(c, block, cols);
  size_t k = rows.size();

  // Expand (Y w_{j_1}) ^ ... ^ (Y w_{j_k}) over all choices of targets and
  // read off the coefficient of w_{i_1} ^ ... ^ w_{i_k}.
  SuperPoly out = SuperPoly::zero(c);
  long lo = block == 0 ? 1 : c.m + 1;
  long hi = block == 0 ? c.m : c.m + c.n;
  std::vector<long> target(k);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == k) {
      // wedge w_{target_1} ^ ... ^ w_{target_k}: zero unless the targets are
      // distinct; sort them, tracking the sign of the permutation
      std::vector<long> sorted = target;
      int sign = 1;
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          if (sorted[a] == sorted[b]) return;
          if (sorted[a] > sorted[b]) {
            std::swap(sorted[a], sorted[b]);
            sign = -sign;
          }
        }
      if (sorted != rows) return;
      SuperPoly term = SuperPoly::one(c);
      for (size_t u = 0; u < k; ++u)
        term = term * SuperPoly::variable(c, static_cast<int>(target[u]),
                                          static_cast<int>(cols[u]));
      out = (sign > 0) ? out + term : out - term;
      return;
    }
    for (long u = lo; u <= hi; ++u) {
      target[pos] = u;
      self(self, pos + 1);
    }
  };
  if (k == 0) return SuperPoly::one(c);
  rec(rec, 0);
  return out;
}

namespace {

// Product over the columns of the conjugate shape: column entries of t_i
// pick rows, column entries of t_j pick columns.
SuperPoly tableau_pair_product(const PolyContext& c, int block, const Tableau& ti,
                               const Tableau& tj) {
  if (ti.shape() != tj.shape())
    throw std::invalid_argument("tableau pair must share its shape");
  SuperPoly acc = SuperPoly::one(c);
  long width = ti.shape().empty() ? 0 : ti.shape().part(0);
  long offset = block == 0 ? 0 : c.m;
  for (long col = 0; col < width; ++col) {
    std::vector<long> rows = ti.column(static_cast<size_t>(col));
    std::vector<long> cols = tj.column(static_cast<size_t>(col));
    for (long& v : rows) v += offset;
    for (long& v : cols) v += offset;
    acc = acc * minor_det(c, block, rows, cols);
  }
  return acc;
}

}  // namespace

SuperPoly bideterminant(const PolyContext& c, const BideterminantIndex& idx) {
  const ShapeData& sd = idx.shape;
  if (idx.ti_plus.shape() != sd.mu_plus || idx.tj_plus.shape() != sd.mu_plus ||
      idx.ti_minus.shape() != sd.mu_minus || idx.tj_minus.shape() != sd.mu_minus)
    throw std::invalid_argument("tableau shapes do not match the shape data");
  SuperPoly out = tableau_pair_product(c, 0, idx.ti_plus, idx.tj_plus) *
                  tableau_pair_product(c, 1, idx.ti_minus, idx.tj_minus);
  if (sd.a > 0 || sd.b > 0)
    throw std::invalid_argument("shape data must have a, b <= 0");
  out.den[0] += static_cast<int>(-sd.a);
  out.den[1] += static_cast<int>(-sd.b);
  return out;
}

long independence_rank(const std::vector<SuperPoly>& elements) {
  if (elements.empty()) return 0;
  std::array<int, 6> target{};
  for (const auto& f : elements)
    for (int slot = 0; slot < 6; ++slot)
      target[slot] = std::max(target[slot], f.den[slot]);

  std::map<Monomial, size_t> columns;
  std::vector<std::map<size_t, Scalar>> rows;
  rows.reserve(elements.size());
  for (const auto& f : elements) {
    SuperPoly lift = lifted(f, target);
    std::map<size_t, Scalar> row;
    for (const auto& [mono, coeff] : lift.terms) {
      auto it = columns.find(mono);
      if (it == columns.end()) it = columns.emplace(mono, columns.size()).first;
      row[it->second] = coeff;
    }
    rows.push_back(std::move(row));
  }

  long p = elements.front().ctx.p;
  Matrix a(elements.size(), std::vector<Scalar>(columns.size(), Scalar::zero(p)));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [cidx, coeff] : rows[r]) a[r][cidx] = coeff;
  return gauss_rank(std::move(a));
}

std::vector<BideterminantIndex> standard_indices(const ShapeData& sd, int m, int n) {
  auto plus = enumerate_standard(sd.mu_plus, m);
  auto minus = enumerate_standard(sd.mu_minus, n);
  std::vector<BideterminantIndex> out;
  out.reserve(plus.size() * plus.size() * minus.size() * minus.size());
  for (const auto& ti_p : plus)
    for (const auto& tj_p : plus)
      for (const auto& ti_m : minus)
        for (const auto& tj_m : minus)
          out.push_back({sd, ti_p, tj_p, ti_m, tj_m});
  return out;
}

namespace {

// Dominant partition weights strictly below mu in GL(k) dominance with the
// same degree, paired with mu itself first.
std::vector<Partition> partitions_below(const Partition& mu, int k) {
  std::vector<long> as_weight(static_cast<size_t>(k), 0);
  for (size_t r = 0; r < mu.rows() && r < static_cast<size_t>(k); ++r)
    as_weight[r] = mu.part(r);
  if (mu.rows() > static_cast<size_t>(k))
    throw std::invalid_argument("shape has more rows than the alphabet");
  std::vector<Partition> out;
  for (const auto& w : dominated_dominant_gl(as_weight)) out.emplace_back(w);
  return out;
}

}  // namespace

StraightenResult straighten(const PolyContext& c, const BideterminantIndex& idx) {
  const ShapeData& sd = idx.shape;
  int m = c.m, n = c.n;

  // spanning set: standard indices of every blockwise-dominated shape pair,
  // the input's own shape first
  std::vector<std::pair<Partition, Partition>> shapes;
  for (const auto& pp : partitions_below(sd.mu_plus, m))
    for (const auto& pm : partitions_below(sd.mu_minus, n))
      shapes.emplace_back(pp, pm);
  std::stable_sort(shapes.begin(), shapes.end(),
                   [&](const auto& x, const auto& y) {
                     return (x.first == sd.mu_plus && x.second == sd.mu_minus) &&
                            !(y.first == sd.mu_plus && y.second == sd.mu_minus);
                   });

  std::vector<BideterminantIndex> span;
  for (const auto& [pp, pm] : shapes) {
    ShapeData ssd = sd;
    ssd.mu_plus = pp;
    ssd.mu_minus = pm;
    ssd.nu_plus = conjugate(pp);
    ssd.nu_minus = conjugate(pm);
    auto batch = standard_indices(ssd, m, n);
    span.insert(span.end(), batch.begin(), batch.end());
  }

  SuperPoly target = bideterminant(c, idx);
  std::vector<SuperPoly> images;
  images.reserve(span.size());
  for (const auto& sidx : span) images.push_back(bideterminant(c, sidx));

  std::array<int, 6> den{};
  for (int slot = 0; slot < 6; ++slot) den[slot] = target.den[slot];
  for (const auto& f : images)
    for (int slot = 0; slot < 6; ++slot) den[slot] = std::max(den[slot], f.den[slot]);

  std::map<Monomial, size_t> rows;
  auto row_of = [&](const Monomial& mono) {
    auto it = rows.find(mono);
    if (it == rows.end()) it = rows.emplace(mono, rows.size()).first;
    return it->second;
  };
  std::vector<std::map<size_t, Scalar>> cols(images.size());
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [mono, coeff] : lifted(images[j], den).terms)
      cols[j][row_of(mono)] = coeff;
  std::map<size_t, Scalar> rhs;
  for (const auto& [mono, coeff] : lifted(target, den).terms)
    rhs[row_of(mono)] = coeff;

  Matrix a(rows.size(), std::vector<Scalar>(images.size(), Scalar::zero(c.p)));
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [r, coeff] : cols[j]) a[r][j] = coeff;
  std::vector<Scalar> b(rows.size(), Scalar::zero(c.p));
  for (const auto& [r, coeff] : rhs) b[r] = coeff;

  auto solution = gauss_solve(std::move(a), std::move(b));
  if (!solution)
    throw std::runtime_error(
        "straightening system inconsistent; the spanning statement fails");

  StraightenResult result;
  SuperPoly residual = target;
  for (size_t j = 0; j < span.size(); ++j) {
    if ((*solution)[j].is_zero()) continue;
    result.expansion.emplace_back(span[j], (*solution)[j]);
    residual -= images[j].scaled((*solution)[j]);
  }
  result.zero_residual = residual.is_zero();
  return result;
}

FactorBasis assemble_factor_basis(const Weight& lambda, long p) {
  int m = lambda.m(), n = lambda.n();
  ShapeData sd = shape_data(lambda);
  PolyContext yc{m, n, p, 'y', Coalgebra::full, 1};

  // odd positions of the generic matrix, row-major over both blocks
  std::vector<std::pair<int, int>> odd_positions;
  for (int i = 1; i <= m + n; ++i)
    for (int j = 1; j <= m + n; ++j)
      if (yc.odd(i, j)) odd_positions.emplace_back(i, j);

  auto indices = standard_indices(sd, m, n);

  mpz_class cplus = hook_content_count(sd.mu_plus, m);
  mpz_class cminus = hook_content_count(sd.mu_minus, n);
  FactorBasis basis;
  basis.expected_count = (mpz_class(1) << (2 * m * n)) * cplus * cplus * cminus * cminus;

  size_t patterns = static_cast<size_t>(1) << odd_positions.size();
  for (size_t mask = 0; mask < patterns; ++mask) {
    SuperPoly odd_part = SuperPoly::one(yc);
    std::vector<std::pair<int, int>> eps;
    for (size_t bit = 0; bit < odd_positions.size(); ++bit)
      if (mask & (static_cast<size_t>(1) << bit)) {
        eps.push_back(odd_positions[bit]);
        odd_part = odd_part * SuperPoly::variable(yc, odd_positions[bit].first,
                                                  odd_positions[bit].second);
      }
    for (const auto& idx : indices) {
      SuperPoly element = odd_part * bideterminant(yc, idx);
      basis.elements.push_back({eps, idx});
      basis.images.push_back(phi_star(element));
    }
  }
  return basis;
}

}  // namespace glmn
