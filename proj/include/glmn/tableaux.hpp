#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "glmn/weights.hpp"

namespace glmn {

/// Integer partition; weakly decreasing parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  size_t rows() const { return parts_.size(); }
  long part(size_t r) const { return r < parts_.size() ? parts_[r] : 0; }
  const std::vector<long>& parts() const { return parts_; }
  long cells() const;
  bool empty() const { return parts_.empty(); }

  std::string str() const;
  bool operator==(const Partition& o) const = default;
  auto operator<=>(const Partition& o) const = default;

 private:
  std::vector<long> parts_;
};

Partition conjugate(const Partition& p);

/// Shape data of a dominant weight: a = min(lambda_m, 0), b = min(lambda_{m+n}, 0),
/// mu = lambda - a e_m - b e_{m+n} (partition blocks), nu = blockwise conjugates.
struct ShapeData {
  long a = 0, b = 0;
  Weight mu;
  Partition mu_plus, mu_minus;
  Partition nu_plus, nu_minus;
};

ShapeData shape_data(const Weight& lambda);

/// Filling of a Young diagram with entries in [1, bound].
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<std::vector<long>> rows, int bound);

  const Partition& shape() const { return shape_; }
  int bound() const { return bound_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  std::vector<long> column(size_t c) const;

  /// Semistandard: rows weakly increase, columns strictly increase.
  bool is_standard() const;

  /// Row-reading word (rows concatenated top to bottom).
  std::vector<long> row_word() const;

  std::string str() const;
  bool operator==(const Tableau& o) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<long>> rows_;
  int bound_ = 0;
};

/// All semistandard tableaux of the given shape with entries in [1, bound],
/// in lexicographic order of row-reading words.
std::vector<Tableau> enumerate_standard(const Partition& shape, int bound);

/// Stanley hook-content product; equals the semistandard count.
mpz_class hook_content_count(const Partition& shape, long bound);

}  // namespace glmn
