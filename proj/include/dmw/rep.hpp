// rep.hpp — representation-theoretic invariants of diagram monoids and of
// generic finite monoids.  See LICENSE.
//
// The heart of the module is exact dimension data:
//   * simple_dim_tl      — closed form for the simple modules of the
//                          Temperley-Lieb monoid in any characteristic,
//                          driven by a (3,p)-adic digit rule;
//   * ssdim/ssdims       — semisimple dimensions |L|/|H| for all nine
//                          families (upper proxies, exact when semisimple);
//   * gram_matrix + rank — an independent oracle: the rank of the cell Gram
//                          matrix over a concrete field is the dimension of
//                          the corresponding simple module.
// On top of that sit representation objects (cell modules, the two trivial
// one-dimensional representations, apex computation, faithfulness tests) and
// the gap/faithfulness reports with their ratio diagnostics.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmw/bigint.hpp"
#include "dmw/families.hpp"
#include "dmw/matrix.hpp"
#include "dmw/monoid.hpp"

namespace dmw {

// ---------------------------------------------------------------------------
// (3,p)-adic digits
// ---------------------------------------------------------------------------

// Characteristic 0 is treated as "p = infinity" and encoded as 0, matching
// FieldSpec::ch.
inline constexpr long NU_INFINITY = -1;  // nu(0); compares above every level

// Digit expansion x = x_0 + 3*(x_1 + p*x_2 + p^2*x_3 + ...) with
// x_0 in {0,1,2} and 0 <= x_i < p for i >= 1.  For p = 0 (infinity) the tail
// is the single unbounded digit x_1 = (x - x_0)/3.  The only negative input
// that occurs is x = -1, expanded as digits (2, -1) for every p.
struct AdicExpansion {
  long x = 0;
  long p = 0;                // 0 = infinity
  std::vector<long> digits;  // digits[0] = x_0; at least two entries
};

AdicExpansion adic_expansion(long x, long p);

// The usual p-adic valuation, with the characteristic-0 convention
// nu_p(x) = 0 for x != 0 at p = infinity; NU_INFINITY for x = 0.
long nu_p(long x, long p);

// nu_{3,p}(x): 0 when 3 does not divide x, NU_INFINITY when x = 0, and
// nu_p(x/3) otherwise — so e.g. nu3p(6, infinity) = nu_p(2) = 0.  (The
// digit rule for e_tilde internally compares the index of the lowest
// nonzero digit instead, which sits one level higher on multiples of 3;
// see the implementation notes.)  Levels compare with nu_less below.
long nu3p(long x, long p);

inline bool nu_less(long a, long b) {  // a < b with NU_INFINITY on top
  if (a == NU_INFINITY) return false;
  if (b == NU_INFINITY) return true;
  return a < b;
}

// Digitwise x <= y (both expanded at the same p, zero-padded).
bool adic_leq(long x, long y, long p);

// The coefficient e~_p(X, V) in {-1, 0, +1}; zero unless X >= V >= -1 and
// X = V (mod 2).
int e_tilde(long X, long V, long p);

// Entry of the displayed e-matrix at row n, column k (the tabulated
// index shift): e_coefficient(n, k, p) = e~_p(n-1, k-1).
int e_coefficient(long n, long k, long p);

// D(n, r) = binom(n, r) - binom(n, r-1): the dimension of the r-cup cell
// module of TL_n, also the number of half diagrams |B_{n-2r}^n|.
Int tl_cell_dim(long n, long r);

// Dimension of the simple TL_n-module with apex width k over a field of
// characteristic p (0 allowed):  sum_r e~_p(n-2r+1, k+1) * D(n, r).
// Requires 0 <= k <= n with n - k even.
Int simple_dim_tl(long n, long k, long p);

// All simple dimensions of TL_n at characteristic p, as (k, dim) pairs with
// k ascending through the apex widths.
std::vector<std::pair<long, Int>> simple_dims_tl(long n, long p);

// ---------------------------------------------------------------------------
// semisimple dimensions
// ---------------------------------------------------------------------------

// ssdim(f, n, k) = |L|/|H| for the width-k cell: the dimension of the cell
// module divided by the H-class size.  This is the semisimple dimension of
// the simple module attached to (cell, trivial H(e)-representation) and an
// upper proxy for its actual dimension.  Throws when the family has no
// width-k cell at degree n.
Int ssdim(Family f, long n, long k);

// (k, ssdim) for every apex width, k ascending.
std::vector<std::pair<long, Int>> ssdims(Family f, long n);

// ---------------------------------------------------------------------------
// representations as explicit matrices
// ---------------------------------------------------------------------------

// A matrix representation over the integers (all the representations built
// here — cell modules, trivial representations, permutation modules — have
// 0/1 matrices; reductions mod p are taken downstream).  The constructor-
// helpers verify rho(1) = id and multiplicativity, exhaustively for small
// monoids and on a deterministic sample of pairs for larger ones.
struct Representation {
  std::shared_ptr<const Monoid> monoid;
  size_t dim = 0;
  std::vector<IntMatrix> mats;  // one per monoid element
  std::string name;
};

// Build a representation from matrices and verify the homomorphism property.
Representation make_representation(std::shared_ptr<const Monoid> m,
                                   std::vector<IntMatrix> mats,
                                   std::string name);

// The two one-dimensional trivial representations: 1_b (indicator of the
// units) and 1_t (constant 1).  They coincide exactly when the monoid is a
// group.
Representation trivial_bottom(std::shared_ptr<const Monoid> m);
Representation trivial_top(std::shared_ptr<const Monoid> m);

Representation direct_sum(const Representation& a, const Representation& b);

// The cell module of a J-cell: the span of the L-class of the cell's
// canonical idempotent, with basis the class elements in ascending index
// order; a basis vector is sent to zero when the product drops out of the
// cell.  dim = |L|.  Requires an idempotent cell.
Representation cell_module(std::shared_ptr<const Monoid> m,
                           const CellStructure& cs, size_t cell);

// Permutation representation of the full transformation monoid on n points.
Representation transformation_rep(std::shared_ptr<const TransformationMonoid> m);

// The apex: among the J-cells that do not annihilate the representation,
// the unique one all others reach (the minimum of the non-annihilating set
// in the ideal order).  Throws std::logic_error when no unique such cell
// exists (the representation then has no apex in the sense used here).
size_t apex(const Representation& rep, const CellStructure& cs);

// Whether rep is isomorphic to a direct sum of copies of 1_b and 1_t:
// every unit must act as the identity matrix and — when non-units exist —
// all non-units must act as one common matrix.
bool is_trivial_sum(const Representation& rep);

// Whether all element matrices are pairwise distinct.
bool is_faithful(const Representation& rep);

// ---------------------------------------------------------------------------
// Gram matrices
// ---------------------------------------------------------------------------

// The Gram matrix of the width-k cell, built from the cup patterns:
// l_j has bottom pattern beta_j and top pattern beta_0 mirrored, with the
// identity pairing of through strands; e = l_0 is idempotent, and
// P[i][j] = 1 exactly when l_j * star(l_i) = e.  Supported for the families
// whose patterns determine the element (TL, Motzkin, PlanarRook) and for
// Rook (where the identity pairing still forces the only width-k product to
// be e).  The matrix is square of side = number of L-classes of the cell.
// Rows are independent, so assembly optionally parallelises over them; the
// serial path is the reference the tests compare against.
IntMatrix gram_matrix(Family f, long n, long k, bool parallel = false);

// The same matrix computed inside an arbitrary finite monoid from its cell
// structure: rows/columns indexed by the L-/R-classes of the cell through
// the transversals contained in R(e)/L(e).  Requires an idempotent cell
// with trivial H-classes (the group case would need matrix entries in the
// group algebra and is reported as unsupported via std::invalid_argument).
IntMatrix gram_matrix_cell(const Monoid& M, const CellStructure& cs,
                           size_t cell);

// Rank of gram_matrix(f, n, k) over the given field: the dimension of the
// simple module with apex width k (Gram-rank oracle).
Int gram_rank_dim(Family f, long n, long k, const FieldSpec& field,
                  bool parallel = false);

// ---------------------------------------------------------------------------
// counting simple modules
// ---------------------------------------------------------------------------

// Number of simple modules per J-cell at characteristic p: 0 for cells
// without idempotents; for an idempotent cell the number of conjugacy
// classes of H(e) (p = 0) or of its p-regular classes (p > 0) — for the
// symmetric-group H-cells of the diagram families this is the number of
// (p-regular) partitions.  Guarded by the H-class size.
std::vector<Int> count_simples(const Monoid& M, const CellStructure& cs,
                               long p, size_t max_group = 20000);

// ---------------------------------------------------------------------------
// gap reports
// ---------------------------------------------------------------------------

enum class BoundStatus { Exact, LowerBound, Unknown };

struct GapValue {
  Rat value{0};
  bool infinite = false;  // every representation is a sum of trivials
  BoundStatus status = BoundStatus::Unknown;
  std::string source;  // "table-formula" | "gram-rank" | "bound" + short note
};

struct GapReport {
  std::string monoid;        // human-readable platform description
  long characteristic = 0;   // field characteristic (0 = rationals)
  std::optional<Int> size;   // |M| when cheap to state exactly
  GapValue gap, ssgap, faith;
};

// Render value/sqrt(size) as "num/den / sqrt(size) ~ decimal" (exact part
// first, decimal from ratio_decimal).
std::string ratio_string(const GapValue& v, const Int& size);

// --- exact gaps -----------------------------------------------------------

// gap of TL_n truncated at width k (trunc_k = widths <= k plus a fresh
// unit; nullopt = the full monoid), over characteristic p.  Exact: the
// nontrivial simples are the apexes l with 2 <= l <= k (and l < n for the
// full monoid), their dimensions are simple_dim_tl, and trivial-by-trivial
// extensions are ruled out by well-roundedness for n >= 5 and by a direct
// derivation computation below that.
GapValue gap_tl(long n, std::optional<long> trunc_k, long p);

// gap of the planar rook monoid (= n; semisimple over every field) and of
// its two-sided truncation with kept widths [n-l+1, n-k]:
// min(binom(n,k), binom(n,l-1)).
GapValue gap_prook(long n);
GapValue gap_prook_truncated(long n, long k, long l);

// Exact ssgap (minimal semisimple dimension of a nontrivial simple) for the
// planar families and their width-<=k truncations; for TL/pPa/Motzkin/pRook
// the H-classes are trivial, so this is a minimum of ssdim values.
GapValue ssgap_planar(Family f, long n, std::optional<long> trunc_k);

// --- cyclic groups ---------------------------------------------------------

// gap of Z/n over Q (min over prime divisors r of n of r-1) or over F_q
// with q = p^deg.  n >= 2 for a nontrivial group; n = 1 reports the trivial
// monoid convention (gap 0, "(-1)-trivial").
GapValue cyclic_gap_rational(long n);
GapValue cyclic_gap_fq(long n, long p, long deg);

// Minimal faithful dimension of Z/n over Q: sum of phi(r^d) over the prime
// powers r^d in the factorisation of n.
GapValue cyclic_faith_rational(long n);

// --- theorem-driven lower bounds -------------------------------------------

// Lower-bound report for the truncation of a family at width k (default
// k = floor(2*sqrt(n))), characteristic 0 unless stated.  Sources:
//   TL:       gap/ssgap/faith lower bounds, exact statements for n >= 5 with
//             k <= 2 sqrt(n), a second regime for n >= 8 with
//             2 sqrt(n) <= k <= n - sqrt(n);
//   Motzkin:  ssgap/faith inherited from TL at degree n-1 (gap open);
//   Brauer:   inherited from TL at degree n (char != 2);
//   PlanarRook/Rook: the two-sided truncation with l = floor(2*sqrt(n));
//   RookBrauer: ssgap/faith via the Motzkin truncation;
//   PlanarPartition: TL at degree 2n;
//   Partition: via the planar partition monoid;
//   Symmetric: gap 1 (sign), minimal faithful n-1 (char 0).
GapReport gap_bounds(Family f, long n, std::optional<long> trunc_k,
                     long characteristic);

// The classical corridor quantity for the TL gap bound:
// bound(n)^2 * n^5 / 4^n as an exact rational (the square of
// bound(n) * n^(5/2) / 2^n), where bound(n) is the TL gap lower bound
// 4/((n+2s+2)(n+2s+4)) * binom(n, floor(n/2)-s) with s = floor(sqrt(n)).
Rat tl_gap_bound_corridor_sq(long n);

// --- Burnside-Brauer --------------------------------------------------------

struct BurnsideReport {
  Int class_total{0};        // sum of H(e) conjugacy class counts
  Int max_dim{0};            // largest simple dimension (or its ssdim proxy)
  bool heuristic = false;    // true when max_dim is the ssdim proxy
  std::optional<Int> bound;  // ceil(max_dim^(1/(cl-1))); nullopt when cl = 1
  std::string note;
};

// ceil(dim(S_max)^(1/(cl-1))): every matrix entry function on the monoid is
// a sum of entries of tensor powers 1..cl-1 of a faithful representation, so
// a faithful representation has dimension at least this bound.
BurnsideReport burnside_brauer_bound(const Monoid& M, const CellStructure& cs);

// The unique multiset of irreducible dimensions of a finite group given by
// its table: d_i | |G|, sum d_i^2 = |G|, count = number of conjugacy
// classes.  Returns the dims ascending; throws std::logic_error when the
// arithmetic constraints do not pin the multiset down uniquely.
std::vector<Int> irreducible_dims(const TableMonoid& G);

// ---------------------------------------------------------------------------
// field complexity
// ---------------------------------------------------------------------------

// dim * log2(q): the bit complexity of a dim-dimensional representation
// over F_q (q a prime power; q = 0 is rejected).
double field_complexity(const Int& dim, const Int& q);

}  // namespace dmw
