#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "glmn/arith.hpp"

namespace glmn {

/// Ambient data for mixed tensor powers of the natural supermodule:
/// V has basis v_1..v_{m+n}, W = V* has basis w_1..w_{m+n}; letters with
/// index > m are odd.
struct DistContext {
  int m = 1, n = 1;
  long p = 0;  // field characteristic (0 = rationals)

  int dim() const { return m + n; }
  bool odd_letter(int k) const { return k > m; }
};

/// Basis word of V^(x)a (x) W^(x)b.
struct Word {
  std::vector<std::uint8_t> v, w;
  auto operator<=>(const Word& o) const = default;
  std::string str() const;
};

std::vector<long> word_weight(const DistContext& c, const Word& word);

/// Formal linear combination of basis words with exact coefficients.
class TensorVec {
 public:
  DistContext ctx;
  std::map<Word, Scalar> terms;

  explicit TensorVec(const DistContext& c) : ctx(c) {}
  static TensorVec basis(const DistContext& c, Word word);
  bool is_zero() const { return terms.empty(); }
  void add_term(Word word, Scalar coeff);
  TensorVec operator+(const TensorVec& o) const;
  TensorVec operator-(const TensorVec& o) const;
  TensorVec scaled(const Scalar& s) const;
  bool operator==(const TensorVec& o) const;
};

// Generators acting on mixed tensor powers.  Operators are never
// materialized as algebra elements; only their actions exist.
struct OpE {
  int i = 0, j = 0;  // i != j
  int t = 1;         // divided power; t <= 1 on odd positions
};
struct OpBinom {
  int i = 0;
  long s = 0;  // binom(e_i, s)
};
struct OpHq {
  std::vector<long> alpha;  // entries in [0,q)
  long q = 0;
};
struct OpHqCoord {
  int i = 0;  // single-coordinate idempotent h^(q)_a(e_i)
  long a = 0;
  long q = 0;
};
struct OpH0 {
  long l = 0;  // sum of e_i minus l, characteristic zero only
};
using Op = std::variant<OpE, OpBinom, OpHq, OpHqCoord, OpH0>;
using OperatorWord = std::vector<Op>;

/// e_ij^(t): even generators distribute the divided power over the tensor
/// slots (each slot absorbs at most one factor), odd generators act on one
/// slot at a time with the Koszul sign of the letters passed over.
TensorVec apply_E(const DistContext& c, int i, int j, int t, const TensorVec& x);

TensorVec apply_binom(const DistContext& c, int i, long s, const TensorVec& x);
TensorVec apply_hq(const DistContext& c, const std::vector<long>& alpha, long q,
                   const TensorVec& x);
TensorVec apply_hq_coord(const DistContext& c, int i, long a, long q,
                         const TensorVec& x);
TensorVec apply_h0(const DistContext& c, long l, const TensorVec& x);

/// Right-to-left application of a formal product of generators.
TensorVec apply_word(const DistContext& c, const OperatorWord& ops,
                     const TensorVec& x);

/// Runs fn over every basis word of V^(x)a (x) W^(x)b.
void for_each_word(const DistContext& c, int a, int b,
                   const std::function<void(const Word&)>& fn);

/// One clause of the idempotent/divided-power commutation identities,
/// checked on every basis word of V^(x)a (x) W^(x)b.  Returns the first
/// violating word, if any.
///   clause 1:  h_a(e_s) e_ij^(t) = e_ij^(t) h_a(e_s)        (s != i,j)
///   clause 2:  h_a(e_i) e_ij^(t) = e_ij^(t) h_{a-t}(e_i)
///   clause 3:  h_a(e_j) e_ij^(t) = e_ij^(t) h_{a+t}(e_j)
std::optional<Word> check_commutation_clause(const DistContext& c, int clause,
                                             int s, int i, int j, int t, long a,
                                             long q, int pow_v, int pow_w);

/// h^(q)_alpha with |alpha| != l (mod q) annihilates V^(x)(l+k) (x) W^(x)k
/// for every k in [max(0,-l), k_max].
bool kernel_annihilation(const DistContext& c, long l, long q,
                         const std::vector<long>& alpha, int k_max);

/// Monomial element u^+ u^- of Dist(V^+) Dist(V^-): exponents per position,
/// upper triangle (i < j) and lower triangle (i > j); odd exponents <= 1.
/// Factors apply in row-major position order, rightmost first.
struct DistMonomialPair {
  std::map<std::pair<int, int>, int> upper, lower;
  std::string str() const;
  auto operator<=>(const DistMonomialPair& o) const = default;
};

struct WitnessOutcome {
  int k = 0;
  std::vector<long> beta;
  Word z;
  TensorVec image;
};

/// The non-vanishing half of the kernel theorem in characteristic p: for
/// u = sum_s u^+_s u^-_s and |alpha| = l (mod q), builds the witness word z
/// of the proof (minimal height summand, smallest admissible k and beta),
/// checks h_alpha z = z and returns u.z together with the data.  A zero
/// result is a hard failure.
WitnessOutcome kernel_witness(const DistContext& c,
                              const std::vector<DistMonomialPair>& summands,
                              const std::vector<long>& alpha, long q, long l);

/// Polynomial in e_1..e_{m+n-1} with rational coefficients (char 0 diagonal
/// part); exponent vectors map to coefficients.
struct DiagPoly {
  std::map<std::vector<long>, mpq_class> coeffs;
  bool is_zero() const;
  mpq_class eval(const std::vector<long>& mu) const;
  std::string str() const;
};

struct Char0Summand {
  DistMonomialPair ops;
  DiagPoly g;
};

/// h_0(l) = sum e_i - l annihilates V^(x)(l+k) (x) W^(x)k for k <= k_max.
bool char0_annihilation(const DistContext& c, long l, int k_max);

struct Char0WitnessOutcome {
  int k = 0;
  std::vector<long> shifts;  // N_1 > ... > N_{m+n-1} > 0
  Word z;
  TensorVec image;
};

/// Characteristic-zero witness: z built from the strictly decreasing shifts
/// N_i chosen so the diagonal polynomial of the minimal-height summand does
/// not vanish on the weight of z; returns sum_s g_s(weight) u_s . z != 0.
Char0WitnessOutcome char0_witness(const DistContext& c,
                                  const std::vector<Char0Summand>& summands,
                                  long l);

}  // namespace glmn
