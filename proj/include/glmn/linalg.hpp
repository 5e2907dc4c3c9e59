#pragma once

#include <optional>
#include <vector>

#include "glmn/arith.hpp"

namespace glmn {

using Matrix = std::vector<std::vector<Scalar>>;

/// Exact rank by Gaussian elimination over F_p or Q.
long gauss_rank(Matrix a);

/// Exact solution of A x = b (free variables set to zero); nullopt when the
/// system is inconsistent.
std::optional<std::vector<Scalar>> gauss_solve(Matrix a, std::vector<Scalar> b);

}  // namespace glmn
