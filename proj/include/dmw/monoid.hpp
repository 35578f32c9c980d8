#pragma once
// monoid.hpp — finite monoid engine: abstract monoids, multiplication
// tables, diagram/transformation/cyclic monoids, Green's relations with the
// full cell (eggbox) structure, Rees-style truncations, roundedness, and
// derivation spaces between one-dimensional representations.
// See LICENSE.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmw/diagram.hpp"
#include "dmw/families.hpp"
#include "dmw/matrix.hpp"

namespace dmw {

// ---------------------------------------------------------------------------
// abstract monoid
// ---------------------------------------------------------------------------

// A finite monoid with elements indexed 0..size()-1.
class Monoid {
 public:
  virtual ~Monoid() = default;
  virtual size_t size() const = 0;
  virtual size_t unit() const = 0;
  virtual size_t mul(size_t a, size_t b) const = 0;
  virtual std::string label(size_t a) const { return std::to_string(a); }
  // A generating set (the unit is implicitly available as the empty word).
  // The default — every element — is always correct but slows the Green's
  // machinery down on large monoids.
  virtual std::vector<size_t> generators() const;
};

// ---------------------------------------------------------------------------
// concrete monoids
// ---------------------------------------------------------------------------

// Monoid given by its full multiplication table (row-major:
// table[a*m + b] = a*b).  The constructor checks the unit law and
// associativity: exhaustively for m <= 512, on a fixed deterministic sample
// of triples beyond that.
class TableMonoid final : public Monoid {
 public:
  TableMonoid(size_t m, size_t unit, std::vector<uint32_t> table,
              std::vector<std::string> labels = {});

  size_t size() const override { return m_; }
  size_t unit() const override { return unit_; }
  size_t mul(size_t a, size_t b) const override { return table_[a * m_ + b]; }
  std::string label(size_t a) const override;

 private:
  size_t m_, unit_;
  std::vector<uint32_t> table_;
  std::vector<std::string> labels_;
};

// Text round-trip: first line "m unit", then m rows of m products.
void write_table(const TableMonoid& M, std::ostream& os);
TableMonoid read_table(std::istream& is);

// A diagram family at a fixed degree, with elements sorted by their
// serialization.  Multiplication is diagram composition plus an index lookup.
class DiagramMonoid final : public Monoid {
 public:
  DiagramMonoid(Family f, int n, const EnumGuard& guard = {});

  Family family() const { return family_; }
  int degree() const { return n_; }
  const Diagram& at(size_t i) const { return elems_[i]; }
  size_t index_of(const Diagram& d) const;  // throws std::invalid_argument

  size_t size() const override { return elems_.size(); }
  size_t unit() const override { return unit_; }
  size_t mul(size_t a, size_t b) const override;
  std::string label(size_t a) const override { return elems_[a].to_string(); }
  std::vector<size_t> generators() const override { return gen_indices_; }

 private:
  Family family_;
  int n_;
  size_t unit_ = 0;
  std::vector<Diagram> elems_;
  std::unordered_map<Diagram, size_t> index_;
  std::vector<size_t> gen_indices_;
};

// The full transformation monoid T_n: all maps {0..n-1} -> {0..n-1} under
// composition, with mul(a, b) = a after b.  Elements are never stored; an
// element's index encodes its value table in base n.  Degrees up to 7.
class TransformationMonoid final : public Monoid {
 public:
  explicit TransformationMonoid(int n);

  int degree() const { return n_; }
  std::vector<int> values(size_t a) const;      // decoded value table
  size_t index_of(const std::vector<int>& f) const;

  size_t size() const override { return size_; }
  size_t unit() const override { return unit_; }
  size_t mul(size_t a, size_t b) const override;
  std::string label(size_t a) const override;   // e.g. "[2,0,1]"
  std::vector<size_t> generators() const override;

 private:
  int n_;
  size_t size_, unit_;
  std::vector<size_t> pow_;  // pow_[i] = n^i
};

// The monogenic monoid <a | a^(index+period) = a^index> on index+period
// elements a^0..a^(index+period-1); cyclic_monoid(0, n) is the cyclic group
// of order n.
TableMonoid cyclic_monoid(long index, long period);

// Materialize any monoid as a table / as its opposite (transposed table).
// Throws resource_error when the table would exceed max_cells entries.
TableMonoid to_table(const Monoid& M, size_t max_cells = 25'000'000);
TableMonoid opposite(const Monoid& M, size_t max_cells = 25'000'000);

// ---------------------------------------------------------------------------
// Green's relations
// ---------------------------------------------------------------------------

struct JCell {
  std::vector<size_t> elements;  // ascending element indices
  size_t num_l = 0, num_r = 0;   // number of L-/R-classes inside the cell
  size_t h_size = 0;             // common size of the H-classes
  bool has_idempotent = false;
  size_t idempotent = 0;         // smallest idempotent, if any
};

// The cell structure of a finite monoid.  Class ids for L/R/H number the
// classes by their smallest element.  J-cells are ordered from the group of
// units downwards (a linear extension of the reverse J-order), so cells[0]
// is always the units cell.
struct CellStructure {
  size_t num_l = 0, num_r = 0, num_j = 0, num_h = 0;
  std::vector<uint32_t> l_of, r_of, j_of, h_of;  // element -> class id
  std::vector<JCell> cells;                      // indexed by J id
  // jreach[a][b]: cell b lies in the two-sided ideal generated by cell a
  // (i.e. b <=_J a); reflexive.
  std::vector<std::vector<char>> jreach;
  size_t units_cell = 0;  // always 0 by the ordering, kept for clarity
};

CellStructure green_cells(const Monoid& M);

// Width of a J-cell of a diagram monoid (the common number of through
// blocks), and the inverse lookup.
int cell_width(const DiagramMonoid& M, const CellStructure& cs, size_t cell);
std::optional<size_t> cell_of_width(const DiagramMonoid& M,
                                    const CellStructure& cs, int width);

// units mask / idempotents (independent of green_cells)
std::vector<char> unit_mask(const Monoid& M);
std::vector<size_t> idempotent_indices(const Monoid& M);

// Index and period of an element: the smallest i >= 1, p >= 1 with
// x^(i+p) = x^i, together with the unique idempotent power of x.
struct IndexPeriod {
  size_t index = 0, period = 0;
  size_t idempotent = 0;  // the element x^k, k the multiple of period >= index
};
IndexPeriod index_period(const Monoid& M, size_t x);

// The maximal subgroup at an idempotent e (its H-class) as a table monoid
// with unit e.  Labels are inherited.
TableMonoid group_of(const Monoid& M, const CellStructure& cs, size_t e);

// Conjugacy classes of a group given by its table, each sorted, ordered by
// smallest member; and the order of a group element.
std::vector<std::vector<size_t>> conjugacy_classes(const TableMonoid& G);
size_t element_order(const TableMonoid& G, size_t g);

// Sum over the idempotent J-cells of the number of conjugacy classes of the
// maximal subgroup there (the class number of the monoid).
size_t conjugacy_class_total(const Monoid& M, const CellStructure& cs);

// Whether a sum of one-dimensional representations could be faithful for
// structural reasons: at most two idempotent J-cells, all with trivial
// maximal subgroups.
bool trivial_faithful_possible(const Monoid& M, const CellStructure& cs);

// ---------------------------------------------------------------------------
// truncations (Rees subquotients along the J-order)
// ---------------------------------------------------------------------------

// The subquotient of a monoid determined by a range of J-cells.
//  * low  — keep only cells in the ideal generated by `low`; a fresh unit 1'
//           is adjoined.  `low` must not be the units cell (omit it instead).
//  * high — crush every cell strictly below `high` to a fresh zero 0.
// With both omitted this is the monoid itself.
class TruncationMonoid final : public Monoid {
 public:
  size_t size() const override;
  size_t unit() const override;
  size_t mul(size_t a, size_t b) const override;
  std::string label(size_t a) const override;

  bool has_fresh_unit() const { return fresh_unit_; }
  bool has_zero() const { return has_zero_; }
  size_t zero() const;                            // throws if !has_zero()
  const std::vector<size_t>& kept() const { return kept_; }
  const Monoid& base() const { return *base_; }

 private:
  TruncationMonoid() = default;
  friend TruncationMonoid truncate(std::shared_ptr<const Monoid>,
                                   const CellStructure&, std::optional<size_t>,
                                   std::optional<size_t>);
  std::shared_ptr<const Monoid> base_;
  std::vector<size_t> kept_;   // ascending original indices
  std::vector<long> to_new_;   // original index -> new index, or -1
  bool fresh_unit_ = false, has_zero_ = false;
};

TruncationMonoid truncate(std::shared_ptr<const Monoid> base,
                          const CellStructure& cells,
                          std::optional<size_t> low,
                          std::optional<size_t> high);

// ---------------------------------------------------------------------------
// roundedness
// ---------------------------------------------------------------------------

// Classes of the symmetric-transitive closure of { b*a ~ a } (left) and
// { a*b ~ a } (right) over the non-units; null-roundedness asks every
// non-unit to be a product of two non-units.
struct Roundedness {
  size_t left_classes = 0, right_classes = 0;
  bool left = false, right = false, null_rounded = false, well = false;
};
Roundedness roundedness(const Monoid& M);

// ---------------------------------------------------------------------------
// derivation spaces between one-dimensional representations
// ---------------------------------------------------------------------------

// The two one-dimensional representations every finite monoid carries:
// the trivial one (constant 1) and the indicator of the group of units
// (1 on units, 0 elsewhere — multiplicative because ideals absorb).
enum class OneDimRep { Trivial, UnitsIndicator };

// Dimension of { f : M -> K  with  f(st) = X(s) f(t) + f(s) Y(t) }.
size_t derivation_dim(const Monoid& M, const FieldSpec& K, OneDimRep X,
                      OneDimRep Y);

// The same space modulo the inner derivations c*(X - Y).
size_t ext_dim(const Monoid& M, const FieldSpec& K, OneDimRep X, OneDimRep Y);

// Dimension of the additive homomorphisms f(st) = f(s) + f(t); equals
// derivation_dim with X = Y = Trivial.
size_t additive_hom_dim(const Monoid& M, const FieldSpec& K);

}  // namespace dmw
