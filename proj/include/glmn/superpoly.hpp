#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glmn/arith.hpp"

namespace glmn {

/// Which coordinate superalgebra a polynomial lives in.  The kind fixes the
/// admissible matrix positions and the comultiplication range:
///   full  - K[G],    all positions, Delta sums over every k
///   even  - K[G_ev], block-diagonal positions only
///   lower - K[P^-],  everything except the 12 block
enum class Coalgebra { full, even, lower };

/// Variable universe of one polynomial engine: the (m+n)x(m+n) generic
/// matrix (possibly several tensor factors of it), entries odd exactly when
/// the row and column fall on opposite sides of m.  Denominators are tracked
/// as exponent pairs of det(B11), det(B22) per tensor factor.
struct PolyContext {
  int m = 1, n = 1;
  long p = 0;            // coefficient field characteristic (0 = rationals)
  char letter = 'x';     // display letter
  Coalgebra kind = Coalgebra::full;
  int sides = 1;         // tensor factor count, 1..3
  int max_degree = 24;   // engine guard on total monomial degree

  int dim() const { return m + n; }
  bool odd(int i, int j) const { return (i <= m) != (j <= m); }
  bool position_valid(int i, int j) const;
  bool operator==(const PolyContext& o) const = default;
};

/// Packed variable reference: (side, row, col) with row-major order inside a
/// side and sides ascending.  Key order is the global Grassmann order.
using VarKey = std::uint32_t;
constexpr VarKey var_key(int side, int i, int j) {
  return (static_cast<VarKey>(side) << 16) |
         (static_cast<VarKey>(i) << 8) | static_cast<VarKey>(j);
}
constexpr int key_side(VarKey k) { return static_cast<int>(k >> 16); }
constexpr int key_row(VarKey k) { return static_cast<int>((k >> 8) & 0xff); }
constexpr int key_col(VarKey k) { return static_cast<int>(k & 0xff); }

struct Monomial {
  std::vector<std::pair<VarKey, int>> even;  // sorted by key, exponents > 0
  std::vector<VarKey> odd;                   // sorted, no repeats

  int parity() const { return static_cast<int>(odd.size()) & 1; }
  int total_degree() const;
  auto operator<=>(const Monomial& o) const = default;
};

/// Element of the localized ring: a polynomial over a common denominator
/// det(B11)^den[0] det(B22)^den[1] per side.  Terms never carry zero
/// coefficients.
class SuperPoly {
 public:
  PolyContext ctx;
  std::map<Monomial, Scalar> terms;
  std::array<int, 6> den{};  // slot = 2*side + block

  static SuperPoly zero(const PolyContext& c) { return SuperPoly(c); }
  static SuperPoly constant(const PolyContext& c, const Scalar& s);
  static SuperPoly one(const PolyContext& c);
  static SuperPoly variable(const PolyContext& c, int i, int j, int side = 0);

  bool is_zero() const { return terms.empty(); }
  /// 0 or 1 when homogeneous, -1 otherwise.
  int parity() const;
  int max_term_degree() const;

  SuperPoly operator-() const;
  SuperPoly operator+(const SuperPoly& o) const;
  SuperPoly operator-(const SuperPoly& o) const;
  SuperPoly operator*(const SuperPoly& o) const;
  SuperPoly& operator+=(const SuperPoly& o) { return *this = *this + o; }
  SuperPoly& operator-=(const SuperPoly& o) { return *this = *this - o; }
  SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }
  SuperPoly scaled(const Scalar& s) const;
  SuperPoly pow(int e) const;

  /// Numerator with all denominator exponents dropped.
  SuperPoly numerator() const;

  void add_term(Monomial mono, Scalar coeff);

 private:
  explicit SuperPoly(const PolyContext& c) : ctx(c) {}
};

/// Fractions compared after lifting to a common denominator.
bool equivalent(const SuperPoly& f, const SuperPoly& g);

/// Multiply numerator through so the denominator exponents reach target.
SuperPoly lifted(const SuperPoly& f, const std::array<int, 6>& target);

/// Relabel a polynomial into an engine with more tensor factors, shifting
/// its sides by `offset`.
SuperPoly embed(const SuperPoly& f, int new_sides, int offset);

/// det of the generic block (0 = B11, 1 = B22) on one side, as a polynomial.
SuperPoly block_det(const PolyContext& c, int block, int side = 0);

/// det of the submatrix with the given global row/column indices (arbitrary
/// tuples; repeated indices give zero by antisymmetry).
SuperPoly generic_minor(const PolyContext& c, const std::vector<long>& rows,
                        const std::vector<long>& cols, int side = 0);

/// Adjugate of a generic even block: adj[k][j] * det^-1 is the (k,j) entry
/// of the inverse.  Indices are 0-based within the block.
std::vector<std::vector<SuperPoly>> adjugate_matrix(const PolyContext& c,
                                                    int block, int side = 0);

/// Entries of the inverse of an even generic block, denominator exponent 1.
std::vector<std::vector<SuperPoly>> invert_even_block(const PolyContext& c,
                                                      int block, int side = 0);

/// Comultiplication on tensor factor `side`, extending
/// Delta(x_ij) = sum_k x_ik (x) x_kj as an algebra morphism.  Denominators
/// are only admitted for the even and lower kinds, where both block
/// determinants are group-like.
SuperPoly comultiply(const SuperPoly& f, int side = 0);

/// Counit on tensor factor `side` (x_ij -> delta_ij), contracting it away.
SuperPoly counit_side(const SuperPoly& f, int side);

/// The superalgebra isomorphism K[U^-] (x) K[G_ev] (x) K[U^+] -> K[G] on a
/// flattened Y-engine: Y11 -> X11, Y21 -> X21 X11^-1,
/// Y22 -> X22 - X21 X11^-1 X12, Y12 -> X11^-1 X12.  Parity preserving.
SuperPoly phi_star(const SuperPoly& f);

/// z_ij = sum_k y_ik (Y11^-1)_kj in K[P^-], for m < i, j <= m.
SuperPoly z_element(const PolyContext& c, int i, int j);

/// Certificate for membership of a two-sided fraction in L (x) K[P^-],
/// where L is spanned by non-constant monomials in the quadratic elements
/// y_uv (Y11^-1)_st (u,v > m; s,t <= m).
struct LMembershipResult {
  bool member = false;
  int truncation_degree = 0;  // numerator degree bound used for candidates
  // (L-monomial numerator, right cofactor); both denominator-free, the left
  // entries sit over det(B11)^d with d the tested fraction's left exponent
  std::vector<std::pair<SuperPoly, SuperPoly>> expansion;
};

LMembershipResult l_membership(const SuperPoly& tensor_fraction);

/// Delta(z_ij) - z_ij (x) 1 membership in L (x) K[P^-] (with certificate).
LMembershipResult check_invariant_mod_L(int m, int n, long p, int i, int j);

std::string to_string(const SuperPoly& f);

}  // namespace glmn
