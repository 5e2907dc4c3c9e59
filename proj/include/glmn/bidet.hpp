#pragma once

#include <gmpxx.h>

#include <vector>

#include "glmn/superpoly.hpp"
#include "glmn/tableaux.hpp"
#include "glmn/weights.hpp"

namespace glmn {

/// Names one generalized bideterminant: the shape data (mu, a, b) of a
/// dominant weight plus four semistandard-candidate tableaux, two per block.
struct BideterminantIndex {
  ShapeData shape;
  Tableau ti_plus, tj_plus;    // shape mu_+, alphabet bound m
  Tableau ti_minus, tj_minus;  // shape mu_-, alphabet bound n
};

/// Y-engine over K[G_ev] for bideterminant work.
PolyContext even_context(int m, int n, long p);

/// det of the submatrix of one even generic block; arbitrary index tuples,
/// repeated indices give zero.
SuperPoly minor_det(const PolyContext& c, int block, const std::vector<long>& rows,
                    const std::vector<long>& cols);

/// tr(Y o phi_ij) on the exterior-power basis: the coefficient of the wedge
/// of the row basis vectors in the wedge of the transformed column vectors.
/// Independent route to the same minor.
SuperPoly trace_formula(const PolyContext& c, int block, const std::vector<long>& rows,
                        const std::vector<long>& cols);

/// Product over tableau columns of minors of Y11 and Y22, times
/// det(Y11)^a det(Y22)^b (negative powers via denominator exponents).
SuperPoly bideterminant(const PolyContext& c, const BideterminantIndex& idx);

/// Exact rank of the monomial coefficient matrix after clearing all
/// denominators to the elementwise maximum.
long independence_rank(const std::vector<SuperPoly>& elements);

/// All bideterminant indices of the given shape data with standard tableaux,
/// in enumeration order.
std::vector<BideterminantIndex> standard_indices(const ShapeData& sd, int m, int n);

struct StraightenResult {
  std::vector<std::pair<BideterminantIndex, Scalar>> expansion;
  bool zero_residual = false;
};

/// Expands an arbitrary bideterminant over the standard ones of the same
/// shape together with standard ones of strictly smaller shapes (same block
/// degrees).  A failure of the exact solve is a hard error.
StraightenResult straighten(const PolyContext& c, const BideterminantIndex& idx);

/// One basis element of a filtration factor: an odd subset pattern over the
/// 2mn odd positions and a standard bideterminant index.
struct FactorBasisElement {
  std::vector<std::pair<int, int>> eps;  // odd positions, row-major
  BideterminantIndex idx;
};

struct FactorBasis {
  std::vector<FactorBasisElement> elements;
  std::vector<SuperPoly> images;  // phi^* images, in the localized X-engine
  mpz_class expected_count;       // 2^(2mn) (c_+ c_-)^2
};

FactorBasis assemble_factor_basis(const Weight& lambda, long p);

}  // namespace glmn
