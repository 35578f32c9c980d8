// diagram.hpp — set-theoretic diagrams on 2n boundary points.  See LICENSE.
//
// A diagram of degree n is a set partition of the 2n points
//   bottom: 0 .. n-1      top: n .. 2n-1,
// drawn with the bottom row below the top row.  Composition a * b stacks b
// below a (b acts first), identifies b's top row with a's bottom row, and
// discards the connected components that live entirely in the middle; the
// number of such discarded "circles" is reported on request (the parameter
// delta of the diagram algebra is specialised to 1 throughout).
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dmw {

class Diagram {
 public:
  Diagram() = default;

  // Partition given as blocks of point labels in 0 .. 2n-1.  Blocks are
  // canonicalised (sorted internally, ordered by least element); the labels
  // must partition {0, .., 2n-1} exactly or std::invalid_argument is thrown.
  Diagram(int n, const std::vector<std::vector<int>>& blocks);

  static Diagram identity(int n);

  int n() const { return n_; }
  int num_points() const { return 2 * n_; }
  int num_blocks() const { return num_blocks_; }

  // Canonical block id of a point (ids ordered by least element of block).
  int block_of(int point) const { return block_of_[static_cast<size_t>(point)]; }

  // Blocks in canonical order, each sorted ascending.
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Diagram& o) const {
    return n_ == o.n_ && block_of_ == o.block_of_;
  }
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  bool operator<(const Diagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return block_of_ < o.block_of_;
  }

  size_t hash() const;

  // "n;a,b|c,d|..." with canonical block order; parse() accepts the same
  // grammar and rejects anything that is not a partition.
  std::string to_string() const;
  static Diagram parse(const std::string& text);

 private:
  friend Diagram compose(const Diagram&, const Diagram&, int*);
  friend Diagram star(const Diagram&);

  void canonicalise_from_raw(std::vector<int>& raw_ids);

  int n_ = 0;
  int num_blocks_ = 0;
  std::vector<int16_t> block_of_;  // size 2n, canonical ids
};

// a * b: b glued below a.  If `circles` is non-null it receives the number of
// middle-only components removed by the gluing.
Diagram compose(const Diagram& a, const Diagram& b, int* circles = nullptr);

// The star (vertical flip) anti-involution: bottom i <-> top n+i.
Diagram star(const Diagram& a);

// Number of through blocks (blocks meeting both rows); also called the rank
// or propagating number.
int width(const Diagram& a);

// Planarity inside the rectangle: blocks can be drawn without crossings.
// Tested against the linear boundary walk  bottom 0..n-1, then top 2n-1..n.
bool is_planar(const Diagram& a);

// ---------------------------------------------------------------------------
// factorisation a = (top half) o (permutation) o (bottom half)
// ---------------------------------------------------------------------------

struct Factorization {
  int n = 0;
  int k = 0;  // width
  // Partition of the bottom points (labels 0..n-1) induced by the blocks of
  // a; through parts are flagged.  Parts ordered by least element.
  std::vector<std::vector<int>> bottom_blocks;
  std::vector<char> bottom_through;
  // Same for the top points, relabelled to 0..n-1 (point n+j is stored as j).
  std::vector<std::vector<int>> top_blocks;
  std::vector<char> top_through;
  // sigma[t] = index (in top through order) of the through part glued to the
  // t-th bottom through part.  Identity for planar diagrams.
  std::vector<int> sigma;
};

Factorization factorize(const Diagram& a);
Diagram reassemble(const Factorization& f);

// ---------------------------------------------------------------------------
// generator diagrams
// ---------------------------------------------------------------------------

// Cup-cap u_i (1 <= i <= n-1): bottom {i-1,i} joined, top {n+i-1,n+i} joined,
// all other strands vertical.
Diagram gen_u(int n, int i);

// Transposition s_i (1 <= i <= n-1): strands i-1 and i crossed.
Diagram gen_s(int n, int i);

// Strand deletion e_i (1 <= i <= n): bottom i-1 and top n+i-1 become
// singletons.  (The rook generator epsilon_i and the partition projection.)
Diagram gen_e(int n, int i);

// Right hook r_i (1 <= i <= n-1): bottom i-1 joined to top n+i, bottom i and
// top n+i-1 singletons, all other strands vertical (shifts i-1 -> i).
Diagram gen_r(int n, int i);

// Left hook l_i = star(r_i): shifts i -> i-1.
Diagram gen_l(int n, int i);

// Half-strand merge b_i (1 <= i <= n-1): one block {i-1, i, n+i-1, n+i},
// all other strands vertical.
Diagram gen_b(int n, int i);

}  // namespace dmw

namespace std {
template <>
struct hash<dmw::Diagram> {
  size_t operator()(const dmw::Diagram& d) const { return d.hash(); }
};
}  // namespace std
