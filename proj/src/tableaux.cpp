#include "glmn/tableaux.hpp"

#include <numeric>
#include <stdexcept>

namespace glmn {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must weakly decrease");
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("partition parts must be nonnegative");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::cells() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition{};
  std::vector<long> cols(static_cast<size_t>(p.part(0)));
  for (size_t c = 0; c < cols.size(); ++c) {
    long h = 0;
    while (h < static_cast<long>(p.rows()) &&
           p.part(static_cast<size_t>(h)) > static_cast<long>(c))
      ++h;
    cols[c] = h;
  }
  return Partition(std::move(cols));
}

ShapeData shape_data(const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("shape_data expects a dominant weight");
  int m = lambda.m(), n = lambda.n();
  ShapeData sd;
  sd.a = std::min(lambda[m - 1], 0L);
  sd.b = std::min(lambda[m + n - 1], 0L);
  std::vector<long> e = lambda.entries();
  e[static_cast<size_t>(m - 1)] -= sd.a;
  e[static_cast<size_t>(m + n - 1)] -= sd.b;
  sd.mu = Weight(std::move(e), m, n);
  sd.mu_plus = Partition(sd.mu.plus_block());
  sd.mu_minus = Partition(sd.mu.minus_block());
  sd.nu_plus = conjugate(sd.mu_plus);
  sd.nu_minus = conjugate(sd.mu_minus);
  return sd;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<long>> rows, int bound)
    : shape_(std::move(shape)), rows_(std::move(rows)), bound_(bound) {
  if (rows_.size() != shape_.rows())
    throw std::invalid_argument("tableau row count does not match shape");
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<long>(rows_[r].size()) != shape_.part(r))
      throw std::invalid_argument("tableau row length does not match shape");
    for (long v : rows_[r])
      if (v < 1 || v > bound_)
        throw std::invalid_argument("tableau entry out of alphabet range");
  }
}

std::vector<long> Tableau::column(size_t c) const {
  std::vector<long> out;
  for (size_t r = 0; r < rows_.size(); ++r)
    if (c < rows_[r].size()) out.push_back(rows_[r][c]);
  return out;
}

bool Tableau::is_standard() const {
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c + 1 < rows_[r].size() && rows_[r][c] > rows_[r][c + 1]) return false;
      if (r + 1 < rows_.size() && c < rows_[r + 1].size() &&
          rows_[r][c] >= rows_[r + 1][c])
        return false;
    }
  return true;
}

std::vector<long> Tableau::row_word() const {
  std::vector<long> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string Tableau::str() const {
  std::string out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "/";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::vector<Tableau> enumerate_standard(const Partition& shape, int bound) {
  std::vector<Tableau> out;
  size_t nrows = shape.rows();
  std::vector<std::vector<long>> rows(nrows);
  for (size_t r = 0; r < nrows; ++r)
    rows[r].assign(static_cast<size_t>(shape.part(r)), 0);

  // fill in row-reading order; lexicographic output order falls out
  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == nrows) {
      out.emplace_back(shape, rows, bound);
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    long lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (long v = lo; v <= bound; ++v) {
      rows[r][c] = v;
      self(self, nr, nc);
    }
  };
  if (nrows == 0) {
    out.emplace_back(shape, rows, bound);
    return out;
  }
  rec(rec, 0, 0);
  return out;
}

mpz_class hook_content_count(const Partition& shape, long bound) {
  Partition conj = conjugate(shape);
  mpz_class num = 1, den = 1;
  for (size_t r = 0; r < shape.rows(); ++r)
    for (long c = 0; c < shape.part(r); ++c) {
      long arm = shape.part(r) - c - 1;
      long leg = conj.part(static_cast<size_t>(c)) - static_cast<long>(r) - 1;
      num *= bound + c - static_cast<long>(r);
      den *= arm + leg + 1;
    }
  return num / den;
}

}  // namespace glmn
