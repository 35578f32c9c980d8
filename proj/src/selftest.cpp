// The acceptance suite.  See LICENSE.
#include "dmw/selftest.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "dmw/half_diagram.hpp"
#include "dmw/protocols.hpp"
#include "dmw/rep.hpp"

namespace dmw {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string int_str(const Int& v) { return v.get_str(); }

// --- criterion 1 -----------------------------------------------------------

Outcome c1_cardinalities() {
  std::ostringstream os;
  for (int n = 0; n <= 12; ++n) {
    DiagramMonoid m(Family::TL, n);
    if (Int(static_cast<long>(m.size())) != catalan(n))
      return {false, "TL_" + std::to_string(n) + " cardinality mismatch"};
  }
  os << "TL to n=12 (Ca(12)=" << int_str(catalan(12)) << ")";
  for (int n = 0; n <= 6; ++n) {
    DiagramMonoid m(Family::Brauer, n);
    if (Int(static_cast<long>(m.size())) != double_factorial(2 * n - 1))
      return {false, "Br_" + std::to_string(n) + " cardinality mismatch"};
  }
  os << "; Br to 6 (" << int_str(double_factorial(11)) << ")";
  for (int n = 0; n <= 8; ++n) {
    DiagramMonoid m(Family::PlanarRook, n);
    if (Int(static_cast<long>(m.size())) != binomial(2 * n, n))
      return {false, "pRo_" + std::to_string(n) + " cardinality mismatch"};
  }
  os << "; pRo to 8 (" << int_str(binomial(16, 8)) << ")";
  for (int n = 0; n <= 4; ++n) {
    DiagramMonoid m(Family::Partition, n);
    if (Int(static_cast<long>(m.size())) != bell(2 * n))
      return {false, "Pa_" + std::to_string(n) + " cardinality mismatch"};
  }
  os << "; Pa to 4 (Bell(8)=" << int_str(bell(8)) << ")";
  DiagramMonoid ro3(Family::Rook, 3);
  if (ro3.size() != 34) return {false, "Ro_3 cardinality mismatch"};
  os << "; Ro_3=34";
  return {true, os.str()};
}

// --- criteria 2 and 3: reference dimension tables --------------------------

const std::vector<std::vector<long>>& tl_dims_char0() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1},
      {1, 1},
      {1, 1},
      {1, 3, 1},
      {1, 4, 1},
      {1, 9, 4, 1},
      {1, 13, 6, 1},
      {1, 28, 13, 7, 1},
      {1, 41, 27, 7, 1},
      {1, 90, 41, 34, 9, 1},
      {1, 131, 110, 34, 10, 1},
      {1, 297, 131, 144, 54, 10, 1},
      {1, 428, 429, 144, 64, 12, 1},
      {1, 1001, 428, 573, 273, 64, 13, 1},
      {1, 1429, 1638, 573, 337, 90, 13, 1},
      {1, 3432, 1429, 2211, 1260, 337, 103, 15, 1},
  };
  return rows;
}

const std::vector<std::vector<long>>& tl_dims_char2() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1},
      {1, 1},
      {1, 1},
      {1, 3, 1},
      {1, 4, 1},
      {1, 9, 4, 1},
      {1, 13, 6, 1},
      {1, 27, 13, 7, 1},
      {1, 40, 27, 7, 1},
      {1, 81, 40, 34, 9, 1},
      {1, 121, 110, 34, 10, 1},
      {1, 243, 121, 144, 54, 10, 1},
      {1, 364, 429, 144, 64, 12, 1},
      {1, 729, 364, 573, 272, 64, 13, 1},
      {1, 1093, 1638, 573, 336, 90, 13, 1},
      {1, 2187, 1093, 2211, 1245, 336, 103, 15, 1},
  };
  return rows;
}

Outcome c2_dimension_tables() {
  for (long p : {0L, 2L}) {
    const auto& rows = (p == 0) ? tl_dims_char0() : tl_dims_char2();
    for (long n = 0; n <= 16; ++n) {
      auto dims = simple_dims_tl(n, p);
      if (dims.size() != rows[n].size())
        return {false, "row n=" + std::to_string(n) + " length mismatch"};
      for (size_t i = 0; i < dims.size(); ++i)
        if (dims[i].second != rows[n][i])
          return {false, "entry (n=" + std::to_string(n) +
                             ", k=" + std::to_string(dims[i].first) +
                             ", char " + std::to_string(p) + ") mismatch"};
    }
  }
  return {true, "all entries of both tables match (n <= 16, char 0 and 2)"};
}

Outcome c3_tl24_tuples() {
  const std::vector<long> dims = {1,      534888, 208011, 445741, 389367,
                                  126292, 85216,  31878,  6876,   1726,
                                  252,    22,     1};
  const std::vector<long> ss = {208012, 534888, 653752, 572033, 389367,
                                211508, 92092,  31878,  8602,   1748,
                                252,    23,     1};
  auto d = simple_dims_tl(24, 0);
  auto s = ssdims(Family::TL, 24);
  if (d.size() != 13 || s.size() != 13) return {false, "tuple length"};
  for (size_t i = 0; i < 13; ++i) {
    if (d[i].second != dims[i]) return {false, "dims tuple mismatch"};
    if (s[i].second != ss[i]) return {false, "ssdims tuple mismatch"};
  }
  return {true, "both 13-entry tuples match"};
}

// --- criterion 4 ------------------------------------------------------------

Outcome c4_gram_oracle() {
  size_t checked = 0;
  for (long n = 1; n <= 10; ++n)
    for (long k = n % 2; k <= n; k += 2)
      for (long p : {0L, 2L, 3L}) {
        Int rank = gram_rank_dim(Family::TL, n, k, FieldSpec{p});
        Int formula = simple_dim_tl(n, k, p);
        if (rank != formula)
          return {false, "(n=" + std::to_string(n) + ", k=" +
                             std::to_string(k) + ", char " +
                             std::to_string(p) + "): rank " + int_str(rank) +
                             " vs formula " + int_str(formula)};
        ++checked;
      }
  return {true, std::to_string(checked) + " (n,k,char) triples agree"};
}

// --- criterion 5 ------------------------------------------------------------

Outcome c5_e_matrix() {
  std::map<std::pair<long, long>, int> expect;
  for (auto [n, k] : {std::pair<long, long>{0, 0}, {1, 1}, {2, 2}, {3, 3},
                      {4, 4}, {5, 5}, {6, 0}, {6, 6}, {7, 7}, {8, 2}, {8, 8},
                      {9, 3}, {9, 9}, {10, 10}, {11, 5}, {11, 11}, {12, 0},
                      {12, 6}, {12, 12}, {13, 13}, {14, 2}, {14, 8}, {14, 14},
                      {15, 3}, {15, 9}, {15, 15}, {16, 16}})
    expect[{n, k}] = 1;
  for (auto [n, k] : {std::pair<long, long>{2, 0}, {5, 3}, {6, 2}, {8, 0},
                      {8, 6}, {9, 5}, {11, 3}, {11, 9}, {12, 2}, {12, 8},
                      {14, 0}, {14, 6}, {14, 12}, {15, 5}, {15, 11}})
    expect[{n, k}] = -1;
  size_t entries = 0;
  for (long n = 0; n <= 16; ++n)
    for (long k = 0; k <= n; ++k) {
      auto it = expect.find({n, k});
      int want = (it == expect.end()) ? 0 : it->second;
      if (e_coefficient(n, k, 0) != want)
        return {false, "entry (" + std::to_string(n) + ", " +
                           std::to_string(k) + ") mismatch"};
      ++entries;
    }
  return {true, std::to_string(entries) + " entries (27 plus, 15 minus, " +
                    std::to_string(entries - 42) + " blank)"};
}

// --- criterion 6 ------------------------------------------------------------

Outcome c6_prook_semisimple() {
  for (long n = 1; n <= 5; ++n)
    for (long k = 0; k <= n; ++k) {
      IntMatrix g = gram_matrix(Family::PlanarRook, n, k);
      if (g.rows != g.cols) return {false, "non-square Gram"};
      for (size_t i = 0; i < g.rows; ++i) {
        long row = 0, col = 0;
        for (size_t j = 0; j < g.cols; ++j) {
          long vij = g.at(i, j), vji = g.at(j, i);
          if ((vij != 0 && vij != 1) || (vji != 0 && vji != 1))
            return {false, "entry outside {0,1}"};
          row += vij;
          col += vji;
        }
        if (row != 1 || col != 1)
          return {false, "pRo_" + std::to_string(n) + " J_" +
                             std::to_string(k) + " not a permutation"};
      }
    }
  IntMatrix g31 = gram_matrix(Family::PlanarRook, 3, 1);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (g31.at(i, j) != (i == j ? 1 : 0))
        return {false, "pRo_3 J_1 Gram is not the identity"};
  return {true, "all Grams for n <= 5 are permutation matrices; "
                "pRo_3 J_1 is the identity"};
}

// --- criterion 7 ------------------------------------------------------------

Outcome c7_cell_engine() {
  {
    DiagramMonoid m(Family::TL, 3);
    CellStructure cs = green_cells(m);
    if (cs.num_j != 2) return {false, "TL_3 cell count"};
    const JCell& u = cs.cells[cs.units_cell];
    auto j1 = cell_of_width(m, cs, 1);
    if (!j1) return {false, "TL_3 width-1 cell missing"};
    const JCell& c = cs.cells[*j1];
    if (u.elements.size() != 1 || c.elements.size() != 4 || c.num_l != 2 ||
        c.num_r != 2 || c.h_size != 1)
      return {false, "TL_3 cell shapes"};
  }
  {
    DiagramMonoid m(Family::TL, 4);
    CellStructure cs = green_cells(m);
    if (cs.num_j != 3) return {false, "TL_4 cell count"};
    auto j2 = cell_of_width(m, cs, 2);
    auto j0 = cell_of_width(m, cs, 0);
    if (!j2 || !j0) return {false, "TL_4 cells missing"};
    if (cs.cells[*j2].elements.size() != 9 || cs.cells[*j2].num_l != 3 ||
        cs.cells[*j0].elements.size() != 4 || cs.cells[*j0].num_l != 2)
      return {false, "TL_4 cell shapes"};
  }
  {
    TransformationMonoid t3(3);
    CellStructure cs = green_cells(t3);
    if (cs.num_j != 3) return {false, "T_3 cell count"};
    // units S_3; rank-2 cell of 18 elements (3 x 3 H-cells of size 2);
    // rank-1 cell of the three constants
    const JCell& u = cs.cells[0];
    const JCell& mid = cs.cells[1];
    const JCell& bot = cs.cells[2];
    if (u.elements.size() != 6 || u.h_size != 6)
      return {false, "T_3 units cell"};
    if (mid.elements.size() != 18 || mid.num_l != 3 || mid.num_r != 3 ||
        mid.h_size != 2)
      return {false, "T_3 rank-2 cell (expected |J| = 18)"};
    if (bot.elements.size() != 3 || bot.h_size != 1)
      return {false, "T_3 rank-1 cell"};
  }
  {
    DiagramMonoid b4(Family::Brauer, 4);
    CellStructure cs = green_cells(b4);
    auto j2 = cell_of_width(b4, cs, 2);
    if (!j2 || cs.cells[*j2].h_size != 2)
      return {false, "Br_4 J_2 H-cell size"};
  }
  return {true, "TL_3, TL_4, T_3 (rank-2 cell has 18 elements), Br_4 agree"};
}

// --- criterion 8 ------------------------------------------------------------

Outcome c8_roundedness() {
  for (int n = 5; n <= 7; ++n) {
    DiagramMonoid m(Family::TL, n);
    if (!roundedness(m).well)
      return {false, "TL_" + std::to_string(n) + " not well-rounded"};
  }
  DiagramMonoid t3(Family::TL, 3);
  if (roundedness(t3).left_classes != 2)
    return {false, "TL_3 left-class count"};
  for (int n = 1; n <= 6; ++n) {
    DiagramMonoid m(Family::TL, n);
    for (long p : {0L, 2L, 3L})
      if (additive_hom_dim(m, FieldSpec{p}) != 0)
        return {false, "additive_hom_dim(TL_" + std::to_string(n) +
                           ", char " + std::to_string(p) + ") nonzero"};
  }
  DiagramMonoid t5(Family::TL, 5);
  for (long p : {0L, 2L, 3L})
    for (OneDimRep x : {OneDimRep::Trivial, OneDimRep::UnitsIndicator})
      for (OneDimRep y : {OneDimRep::Trivial, OneDimRep::UnitsIndicator})
        if (ext_dim(t5, FieldSpec{p}, x, y) != 0)
          return {false, "ext_dim(TL_5) nonzero"};
  return {true, "TL_5..TL_7 well-rounded; TL_3 has 2 left classes; "
                "characters and exts vanish"};
}

// --- criterion 9 ------------------------------------------------------------

Outcome c9_graphs() {
  for (int n = 3; n <= 11; n += 2)
    if (!is_connected(build_pattern_graph(PatternGraphKind::Flip, 3, n)))
      return {false, "flip graph (3," + std::to_string(n) + ") disconnected"};
  for (int n = 4; n <= 10; n += 2)
    if (is_connected(build_pattern_graph(PatternGraphKind::Flip, 2, n)))
      return {false, "flip graph (2," + std::to_string(n) + ") connected"};
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 11; n += 2)
      if (!is_connected(build_pattern_graph(PatternGraphKind::Vertical, m, n)))
        return {false, "vertical graph (" + std::to_string(m) + "," +
                           std::to_string(n) + ") disconnected"};
  return {true, "flip graphs: (3, odd n<=11) connected, (2, even n<=10) "
                "disconnected; vertical graphs (m<=3, n<=11) connected"};
}

// --- criterion 10 -----------------------------------------------------------

Outcome c10_periods() {
  size_t elements = 0;
  for (int n = 1; n <= 5; ++n) {
    DiagramMonoid m(Family::Brauer, n);
    CellStructure cs = green_cells(m);
    for (size_t a = 0; a < m.size(); ++a) {
      // dh_suitability throws if the period fails to divide |H(e)|
      dh_suitability(m, cs, a);
      ++elements;
    }
  }
  return {true, std::to_string(elements) + " elements of Br_1..Br_5 checked"};
}

// --- criterion 11 -----------------------------------------------------------

Outcome c11_cyclic() {
  for (long n = 2; n <= 30; ++n) {
    long gap_oracle = 0;
    for (long d = 2; d <= n; ++d)
      if (n % d == 0) {
        long v = euler_phi(d);
        if (gap_oracle == 0 || v < gap_oracle) gap_oracle = v;
      }
    if (cyclic_gap_rational(n).value != gap_oracle)
      return {false, "gap(Z/" + std::to_string(n) + ") mismatch"};

    std::vector<long> divs;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    long faith_oracle = -1;
    for (size_t mask = 1; mask < (size_t{1} << divs.size()); ++mask) {
      long l = 1, cost = 0;
      for (size_t i = 0; i < divs.size(); ++i)
        if (mask & (size_t{1} << i)) {
          l = std::lcm(l, divs[i]);
          cost += euler_phi(divs[i]);
        }
      if (l == n && (faith_oracle < 0 || cost < faith_oracle))
        faith_oracle = cost;
    }
    if (cyclic_faith_rational(n).value != faith_oracle)
      return {false, "faith(Z/" + std::to_string(n) + ") mismatch"};
  }
  return {true, "gap and faith agree with the brute-force cyclotomic oracle "
                "for n <= 30"};
}

// --- criterion 12 -----------------------------------------------------------

Outcome c12_protocols() {
  auto tl = std::make_shared<DiagramMonoid>(Family::TL, 10);
  auto tl_gens = family_generators(Family::TL, 10);
  std::vector<size_t> a = {tl->index_of(tl_gens[0]), tl->index_of(tl_gens[1])};
  std::vector<size_t> b = {tl->index_of(tl_gens[6]), tl->index_of(tl_gens[7]),
                           tl->index_of(tl_gens[8])};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    size_t g = sample_ideal_element(*tl, 4, rng);
    Transcript t = run_su(make_su_spec(tl, g, a, b, seed));
    if (!t.equal || width(tl->at(t.secret_a)) > 4)
      return {false, "SU seed " + std::to_string(seed)};
  }
  auto br = std::make_shared<DiagramMonoid>(Family::Brauer, 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    auto [g, h] = sample_noncommuting_pair(*br, rng);
    Transcript t = run_stickel(make_stickel_spec(br, g, h, seed));
    if (!t.equal) return {false, "Stickel seed " + std::to_string(seed)};
  }
  return {true, "100 SU runs on the width-4 truncation of TL_10 and "
                "100 Stickel runs on Br_5 all key-agree"};
}

// --- criterion 13 -----------------------------------------------------------

Outcome c13_burnside() {
  TransformationMonoid t3(3);
  CellStructure cs = green_cells(t3);
  BurnsideReport r = burnside_brauer_bound(t3, cs);
  if (!r.bound.has_value() || *r.bound != 2)
    return {false, "T_3 bound is not 2"};
  return {true, "class total " + int_str(r.class_total) + ", max dim " +
                    int_str(r.max_dim) + ", bound 2"};
}

// --- criterion 14 -----------------------------------------------------------

Outcome c14_corridor() {
  Rat lo(1, 100), hi(1, 4);
  Rat rmin, rmax;
  for (long n = 16; n <= 64; ++n) {
    Rat r2 = tl_gap_bound_corridor_sq(n);
    if (r2 < lo || r2 > hi)
      return {false, "n=" + std::to_string(n) + " outside the corridor"};
    if (n == 16 || r2 < rmin) rmin = r2;
    if (n == 16 || r2 > rmax) rmax = r2;
  }
  if (rmax > Rat(16) * rmin) return {false, "corridor wider than 16x"};
  Rat spread = rmax / rmin;
  std::ostringstream os;
  os << "bound / (2^n n^{-5/2}) squared stays in [1/100, 1/4] for "
     << "16 <= n <= 64 (range " << rmin.get_d() << " .. " << rmax.get_d()
     << ", spread " << spread.get_d() << "x <= 16x)";
  return {true, os.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "cardinalities vs closed forms", c1_cardinalities},
      {2, "TL dimension tables, char 0 and 2", c2_dimension_tables},
      {3, "TL_24 dims and ssdims tuples", c3_tl24_tuples},
      {4, "Gram rank oracle, TL n <= 10 over Q/F2/F3", c4_gram_oracle},
      {5, "e-matrix, all 153 entries", c5_e_matrix},
      {6, "planar rook semisimplicity", c6_prook_semisimple},
      {7, "cell-engine conformance", c7_cell_engine},
      {8, "roundedness and characters", c8_roundedness},
      {9, "pattern-graph connectivity", c9_graphs},
      {10, "periods divide H-cell orders, Br n <= 5", c10_periods},
      {11, "cyclic gap and faithful dimension vs oracle", c11_cyclic},
      {12, "key-exchange protocols, 100 + 100 seeded runs", c12_protocols},
      {13, "Burnside-style bound for T_3", c13_burnside},
      {14, "gap-bound corridor, 16 <= n <= 64", c14_corridor},
  };
  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = e.fn();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dmw
