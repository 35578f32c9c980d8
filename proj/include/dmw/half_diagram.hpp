// half_diagram.hpp — cup patterns and the pattern graphs.  See LICENSE.
//
// A half diagram in B_m^n has n boundary points 0..n-1, m of them endpoints
// of through strands, the rest paired into non-crossing cups with no through
// strand under a cup.  Two half diagrams a, b are vertical when star(b) o a
// is the identity on m points without closed circles; weakly vertical when
// circles are allowed.  Flip moves open an outer cup into two through strands
// while an adjacent pair of through strands closes into a cup.
#pragma once

#include <string>
#include <vector>

#include "dmw/bigint.hpp"

namespace dmw {

struct HalfDiagram {
  int n = 0;
  // partner[i] = j if {i, j} is a cup, -1 if i is a through endpoint.
  std::vector<int> partner;

  int m() const {
    int t = 0;
    for (int v : partner) t += (v < 0);
    return t;
  }
  bool operator==(const HalfDiagram& o) const { return n == o.n && partner == o.partner; }
  bool operator<(const HalfDiagram& o) const {
    if (n != o.n) return n < o.n;
    return partner < o.partner;
  }
  std::string to_string() const;
};

// Validity: cups non-crossing, no through endpoint strictly under a cup.
bool is_valid_half(const HalfDiagram& h);

// All of B_m^n in deterministic (lexicographic) order.  Empty when m > n or
// m and n have different parity.  |B_m^n| = binom(n,r) - binom(n,r-1) with
// r = (n-m)/2.
std::vector<HalfDiagram> enumerate_half(int m, int n);

Int half_count(int m, int n);

// star(b) o a = id_m tests.
bool vertical(const HalfDiagram& a, const HalfDiagram& b);
bool weakly_vertical(const HalfDiagram& a, const HalfDiagram& b);

// One flip move: open the outer cup `c` (given by its left endpoint) and
// close the adjacent through pair (s, t).  The cup must not lie between s
// and t.  Returns all flip neighbours of `a`.
std::vector<HalfDiagram> flip_neighbours(const HalfDiagram& a);

enum class PatternGraphKind {
  Vertical,  // edges = weakly vertical pairs of distinct patterns
  Flip,      // edges = flip moves
};

struct PatternGraph {
  PatternGraphKind kind;
  int m = 0, n = 0;
  std::vector<HalfDiagram> vertices;
  std::vector<std::pair<size_t, size_t>> edges;  // i < j, no self loops
};

PatternGraph build_pattern_graph(PatternGraphKind kind, int m, int n);

// The empty graph counts as connected.
bool is_connected(const PatternGraph& g);

}  // namespace dmw
