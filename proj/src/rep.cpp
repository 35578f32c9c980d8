// rep.cpp — simple/semisimple dimensions, Gram matrices, representation
// objects, gap and faithfulness reports.  See LICENSE.

#include "dmw/rep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dmw/diagram.hpp"
#include "dmw/half_diagram.hpp"

namespace dmw {

namespace {

void validate_adic_base(long p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("adic base must be 0 (infinity) or a prime");
}

long floor_mod3(long x) {
  long r = x % 3;
  return r < 0 ? r + 3 : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// (3,p)-adic digits
// ---------------------------------------------------------------------------

AdicExpansion adic_expansion(long x, long p) {
  validate_adic_base(p);
  if (x < -1) throw std::invalid_argument("adic_expansion: x < -1");
  AdicExpansion out;
  out.x = x;
  out.p = p;
  if (x == -1) {
    out.digits = {2, -1};  // -1 = 2 + 3*(-1), the tail collapsed to one digit
    return out;
  }
  long x0 = floor_mod3(x);
  long tail = (x - x0) / 3;
  out.digits.push_back(x0);
  if (p == 0) {
    out.digits.push_back(tail);
  } else {
    if (tail == 0) out.digits.push_back(0);
    while (tail > 0) {
      out.digits.push_back(tail % p);
      tail /= p;
    }
  }
  return out;
}

long nu_p(long x, long p) {
  validate_adic_base(p);
  if (x == 0) return NU_INFINITY;
  if (p == 0) return 0;  // characteristic-0 convention
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long nu3p(long x, long p) {
  validate_adic_base(p);
  if (x == 0) return NU_INFINITY;
  if (floor_mod3(x) != 0) return 0;
  return nu_p(x / 3, p);
}

namespace {

// The level used by the e_tilde digit rule: the index of the lowest nonzero
// digit of the expansion.  On multiples of 3 this is 1 + nu_p(x/3), one
// level above nu3p; elsewhere the two agree.
long nu_hat(long x, long p) {
  AdicExpansion e = adic_expansion(x, p);
  for (size_t i = 0; i < e.digits.size(); ++i)
    if (e.digits[i] != 0) return static_cast<long>(i);
  return NU_INFINITY;
}

}  // namespace

bool adic_leq(long x, long y, long p) {
  AdicExpansion a = adic_expansion(x, p), b = adic_expansion(y, p);
  size_t len = std::max(a.digits.size(), b.digits.size());
  a.digits.resize(len, 0);
  b.digits.resize(len, 0);
  for (size_t i = 0; i < len; ++i)
    if (a.digits[i] > b.digits[i]) return false;
  return true;
}

int e_tilde(long X, long V, long p) {
  validate_adic_base(p);
  if (V < -1 || X < V || ((X - V) & 1L)) return 0;
  long M = (X + V) / 2;
  long nV = nu_hat(V, p), nM = nu_hat(M, p);
  if (nV == nM) {
    if (!adic_leq(V, M, p)) return 0;
    if (nV == NU_INFINITY) return 1;  // V = M = 0
    AdicExpansion dV = adic_expansion(V, p), dM = adic_expansion(M, p);
    return dV.digits[static_cast<size_t>(nV)] ==
                   dM.digits[static_cast<size_t>(nV)]
               ? 1
               : 0;
  }
  if (nu_less(nV, nM)) return adic_leq(V, M - 1, p) ? -1 : 0;
  return 0;
}

int e_coefficient(long n, long k, long p) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("e_coefficient: negative index");
  return e_tilde(n - 1, k - 1, p);
}

Int tl_cell_dim(long n, long r) { return binomial(n, r) - binomial(n, r - 1); }

Int simple_dim_tl(long n, long k, long p) {
  validate_adic_base(p);
  if (n < 0 || k < 0 || k > n || ((n - k) & 1L))
    throw std::invalid_argument(
        "simple_dim_tl: need 0 <= k <= n with n - k even");
  Int total = 0;
  for (long r = 0; r <= (n - k) / 2; ++r)
    total += Int(e_tilde(n - 2 * r + 1, k + 1, p)) * tl_cell_dim(n, r);
  return total;
}

std::vector<std::pair<long, Int>> simple_dims_tl(long n, long p) {
  std::vector<std::pair<long, Int>> out;
  for (long k = n % 2; k <= n; k += 2)
    out.emplace_back(k, simple_dim_tl(n, k, p));
  return out;
}

// ---------------------------------------------------------------------------
// semisimple dimensions
// ---------------------------------------------------------------------------

Int ssdim(Family f, long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("ssdim: width out of range");
  switch (f) {
    case Family::TL:
      if ((n - k) & 1L)
        throw std::invalid_argument("ssdim: TL has no odd-gap widths");
      return tl_cell_dim(n, (n - k) / 2);
    case Family::Motzkin: {
      Int total = 0;
      for (long t = 0; k + 2 * t <= n; ++t)
        total += tl_cell_dim(k + 2 * t, t) * binomial(n, k + 2 * t);
      return total;
    }
    case Family::Brauer:
      if ((n - k) & 1L)
        throw std::invalid_argument("ssdim: Brauer has no odd-gap widths");
      return binomial(n, k) * double_factorial(n - k - 1);
    case Family::PlanarRook:
    case Family::Rook:
      return binomial(n, k);
    case Family::RookBrauer: {
      Int total = 0;
      for (long t = 0; 2 * t <= n - k; ++t)
        total += binomial(n, k) * binomial(n - k, 2 * t) *
                 double_factorial(2 * t - 1);
      return total;
    }
    case Family::PlanarPartition:
      return tl_cell_dim(2 * n, n - k);
    case Family::Partition: {
      Int total = 0;
      for (long t = k; t <= n; ++t) total += stirling2(n, t) * binomial(t, k);
      if (n == 0) total = (k == 0) ? 1 : 0;  // the empty partition
      return total;
    }
    case Family::Symmetric:
      if (k != n)
        throw std::invalid_argument("ssdim: symmetric group has width n only");
      return Int(1);
  }
  throw std::invalid_argument("ssdim: unknown family");
}

std::vector<std::pair<long, Int>> ssdims(Family f, long n) {
  std::vector<int> widths = family_apex_widths(f, static_cast<int>(n));
  std::sort(widths.begin(), widths.end());
  std::vector<std::pair<long, Int>> out;
  for (int k : widths) out.emplace_back(k, ssdim(f, n, k));
  return out;
}

// ---------------------------------------------------------------------------
// representations
// ---------------------------------------------------------------------------

namespace {

IntMatrix identity_matrix(size_t d) {
  IntMatrix m(d, d);
  for (size_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      long v = a.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

bool matrix_zero(const IntMatrix& m) {
  for (long v : m.a)
    if (v != 0) return false;
  return true;
}

}  // namespace

Representation make_representation(std::shared_ptr<const Monoid> m,
                                   std::vector<IntMatrix> mats,
                                   std::string name) {
  if (!m) throw std::invalid_argument("make_representation: null monoid");
  size_t sz = m->size();
  if (mats.size() != sz)
    throw std::invalid_argument("make_representation: one matrix per element");
  if (mats.empty()) throw std::invalid_argument("make_representation: empty");
  size_t d = mats[0].rows;
  if (d == 0) throw std::invalid_argument("make_representation: dimension 0");
  for (const IntMatrix& a : mats)
    if (a.rows != d || a.cols != d)
      throw std::invalid_argument("make_representation: ragged matrices");
  if (!(mats[m->unit()].a == identity_matrix(d).a))
    throw std::invalid_argument("make_representation: unit must act as id");
  auto check_pair = [&](size_t a, size_t b) {
    if (!(matmul(mats[a], mats[b]).a == mats[m->mul(a, b)].a)) {
      std::ostringstream os;
      os << "make_representation: rho(" << m->label(a) << " * " << m->label(b)
         << ") != rho(" << m->label(a) << ") rho(" << m->label(b) << ")";
      throw std::invalid_argument(os.str());
    }
  };
  if (sz <= 64) {
    for (size_t a = 0; a < sz; ++a)
      for (size_t b = 0; b < sz; ++b) check_pair(a, b);
  } else {
    uint64_t state = 0x9e3779b97f4a7c15ULL;  // fixed seed: deterministic
    for (int t = 0; t < 4096; ++t) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      size_t a = static_cast<size_t>((state >> 33) % sz);
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      size_t b = static_cast<size_t>((state >> 33) % sz);
      check_pair(a, b);
    }
  }
  Representation rep;
  rep.monoid = std::move(m);
  rep.dim = d;
  rep.mats = std::move(mats);
  rep.name = std::move(name);
  return rep;
}

Representation trivial_bottom(std::shared_ptr<const Monoid> m) {
  if (!m) throw std::invalid_argument("trivial_bottom: null monoid");
  std::vector<char> units = unit_mask(*m);
  std::vector<IntMatrix> mats(m->size(), IntMatrix(1, 1));
  for (size_t a = 0; a < m->size(); ++a) mats[a].at(0, 0) = units[a] ? 1 : 0;
  return make_representation(std::move(m), std::move(mats), "1_b");
}

Representation trivial_top(std::shared_ptr<const Monoid> m) {
  if (!m) throw std::invalid_argument("trivial_top: null monoid");
  std::vector<IntMatrix> mats(m->size(), IntMatrix(1, 1));
  for (IntMatrix& a : mats) a.at(0, 0) = 1;
  return make_representation(std::move(m), std::move(mats), "1_t");
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.monoid.get() != b.monoid.get())
    throw std::invalid_argument("direct_sum: different monoids");
  std::vector<IntMatrix> mats;
  mats.reserve(a.mats.size());
  for (size_t e = 0; e < a.mats.size(); ++e) {
    IntMatrix m(a.dim + b.dim, a.dim + b.dim);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.mats[e].at(i, j);
    for (size_t i = 0; i < b.dim; ++i)
      for (size_t j = 0; j < b.dim; ++j)
        m.at(a.dim + i, a.dim + j) = b.mats[e].at(i, j);
    mats.push_back(std::move(m));
  }
  return make_representation(a.monoid, std::move(mats),
                             a.name + " (+) " + b.name);
}

Representation cell_module(std::shared_ptr<const Monoid> m,
                           const CellStructure& cs, size_t cell) {
  if (!m) throw std::invalid_argument("cell_module: null monoid");
  if (cell >= cs.cells.size())
    throw std::invalid_argument("cell_module: cell id out of range");
  const JCell& c = cs.cells[cell];
  if (!c.has_idempotent)
    throw std::invalid_argument("cell_module: cell has no idempotent");
  size_t e = c.idempotent;
  std::vector<size_t> basis;  // the L-class of e, ascending
  for (size_t x : c.elements)
    if (cs.l_of[x] == cs.l_of[e]) basis.push_back(x);
  size_t d = basis.size();
  auto basis_index = [&](size_t x) -> long {
    auto it = std::lower_bound(basis.begin(), basis.end(), x);
    if (it == basis.end() || *it != x) return -1;
    return static_cast<long>(it - basis.begin());
  };
  std::vector<IntMatrix> mats;
  mats.reserve(m->size());
  for (size_t a = 0; a < m->size(); ++a) {
    IntMatrix mat(d, d);
    for (size_t j = 0; j < d; ++j) {
      size_t y = m->mul(a, basis[j]);
      if (cs.j_of[y] != cell) continue;  // dropped into a lower cell
      long i = basis_index(y);
      if (i < 0)
        throw std::logic_error("cell_module: product left the L-class");
      mat.at(static_cast<size_t>(i), j) = 1;
    }
    mats.push_back(std::move(mat));
  }
  std::ostringstream name;
  name << "cell module (cell " << cell << ")";
  return make_representation(std::move(m), std::move(mats), name.str());
}

Representation transformation_rep(
    std::shared_ptr<const TransformationMonoid> m) {
  if (!m) throw std::invalid_argument("transformation_rep: null monoid");
  size_t n = static_cast<size_t>(m->degree());
  std::vector<IntMatrix> mats;
  mats.reserve(m->size());
  for (size_t a = 0; a < m->size(); ++a) {
    std::vector<int> v = m->values(a);
    IntMatrix mat(n, n);
    for (size_t i = 0; i < n; ++i)
      mat.at(static_cast<size_t>(v[i]), i) = 1;
    mats.push_back(std::move(mat));
  }
  return make_representation(std::move(m), std::move(mats),
                             "permutation module");
}

size_t apex(const Representation& rep, const CellStructure& cs) {
  if (cs.l_of.size() != rep.monoid->size())
    throw std::invalid_argument("apex: cell structure size mismatch");
  std::vector<size_t> live;  // non-annihilating cells
  for (size_t c = 0; c < cs.cells.size(); ++c) {
    for (size_t x : cs.cells[c].elements) {
      if (!matrix_zero(rep.mats[x])) {
        live.push_back(c);
        break;
      }
    }
  }
  if (live.empty()) throw std::logic_error("apex: zero representation");
  std::vector<size_t> minimal;
  for (size_t a : live) {
    bool is_min = true;
    for (size_t b : live)
      if (b != a && cs.jreach[a][b]) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(a);
  }
  if (minimal.size() != 1)
    throw std::logic_error(
        "apex: the non-annihilating cells have no unique extreme element");
  return minimal[0];
}

bool is_trivial_sum(const Representation& rep) {
  const Monoid& m = *rep.monoid;
  std::vector<char> units = unit_mask(m);
  IntMatrix id = identity_matrix(rep.dim);
  const IntMatrix* common = nullptr;
  for (size_t a = 0; a < m.size(); ++a) {
    if (units[a]) {
      if (!(rep.mats[a].a == id.a)) return false;
    } else if (common == nullptr) {
      common = &rep.mats[a];
    } else if (!(rep.mats[a].a == common->a)) {
      return false;
    }
  }
  return true;
}

bool is_faithful(const Representation& rep) {
  std::vector<const IntMatrix*> ptrs;
  ptrs.reserve(rep.mats.size());
  for (const IntMatrix& m : rep.mats) ptrs.push_back(&m);
  std::sort(ptrs.begin(), ptrs.end(),
            [](const IntMatrix* a, const IntMatrix* b) { return a->a < b->a; });
  for (size_t i = 1; i < ptrs.size(); ++i)
    if (ptrs[i]->a == ptrs[i - 1]->a) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Gram matrices
// ---------------------------------------------------------------------------

namespace {

// A one-row pattern: partner index for a cup, -1 for a through point, -2 for
// a deleted point.
struct Pattern {
  std::vector<int> partner;
  bool operator<(const Pattern& o) const { return partner < o.partner; }
};

std::vector<Pattern> tl_patterns(long n, long k) {
  std::vector<Pattern> out;
  for (const HalfDiagram& h :
       enumerate_half(static_cast<int>(k), static_cast<int>(n)))
    out.push_back({h.partner});
  return out;
}

// Planar partial matchings with exactly k through points; a through point
// may not sit under a cup; deleted points are unconstrained.
void motzkin_patterns_rec(int n, int k, int pos, int through,
                          std::vector<int>& open, std::vector<int>& cur,
                          std::vector<Pattern>& out) {
  if (pos == n) {
    if (open.empty() && through == k) out.push_back({cur});
    return;
  }
  // close the innermost open cup
  if (!open.empty()) {
    int a = open.back();
    open.pop_back();
    cur[static_cast<size_t>(a)] = pos;
    cur[static_cast<size_t>(pos)] = a;
    motzkin_patterns_rec(n, k, pos + 1, through, open, cur, out);
    cur[static_cast<size_t>(a)] = -3;
    cur[static_cast<size_t>(pos)] = -3;
    open.push_back(a);
  }
  // open a cup
  if (pos + 1 < n) {
    open.push_back(pos);
    motzkin_patterns_rec(n, k, pos + 1, through, open, cur, out);
    open.pop_back();
  }
  // through point, only at depth 0
  if (open.empty() && through < k) {
    cur[static_cast<size_t>(pos)] = -1;
    motzkin_patterns_rec(n, k, pos + 1, through + 1, open, cur, out);
    cur[static_cast<size_t>(pos)] = -3;
  }
  // deleted point
  cur[static_cast<size_t>(pos)] = -2;
  motzkin_patterns_rec(n, k, pos + 1, through, open, cur, out);
  cur[static_cast<size_t>(pos)] = -3;
}

std::vector<Pattern> motzkin_patterns(long n, long k) {
  std::vector<Pattern> out;
  std::vector<int> open, cur(static_cast<size_t>(n), -3);
  motzkin_patterns_rec(static_cast<int>(n), static_cast<int>(k), 0, 0, open,
                       cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pattern> rook_patterns(long n, long k) {
  // all k-subsets of through points, the rest deleted
  std::vector<Pattern> out;
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Pattern p;
    p.partner.assign(static_cast<size_t>(n), -2);
    for (int i : pick) p.partner[static_cast<size_t>(i)] = -1;
    out.push_back(std::move(p));
    // next combination
    long i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] ==
                         static_cast<int>(n - k + i))
      --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (long j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The element with bottom pattern `bot`, mirrored top pattern `top`, and the
// identity pairing of through strands.
Diagram pattern_element(long n, const Pattern& bot, const Pattern& top) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> bt, tt;
  for (long i = 0; i < n; ++i) {
    int pi = bot.partner[static_cast<size_t>(i)];
    if (pi == -1) bt.push_back(static_cast<int>(i));
    else if (pi == -2) blocks.push_back({static_cast<int>(i)});
    else if (pi > static_cast<int>(i))
      blocks.push_back({static_cast<int>(i), pi});
  }
  for (long i = 0; i < n; ++i) {
    int pi = top.partner[static_cast<size_t>(i)];
    if (pi == -1) tt.push_back(static_cast<int>(n + i));
    else if (pi == -2) blocks.push_back({static_cast<int>(n + i)});
    else if (pi > static_cast<int>(i))
      blocks.push_back({static_cast<int>(n + i), static_cast<int>(n + pi)});
  }
  if (bt.size() != tt.size())
    throw std::logic_error("pattern_element: through count mismatch");
  for (size_t s = 0; s < bt.size(); ++s) blocks.push_back({bt[s], tt[s]});
  return Diagram(static_cast<int>(n), blocks);
}

constexpr size_t kGramSideGuard = 4096;

}  // namespace

IntMatrix gram_matrix(Family f, long n, long k, bool parallel) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("gram_matrix: width out of range");
  std::vector<Pattern> pats;
  switch (f) {
    case Family::TL:
      if ((n - k) & 1L)
        throw std::invalid_argument("gram_matrix: TL needs n - k even");
      pats = tl_patterns(n, k);
      break;
    case Family::Motzkin:
      pats = motzkin_patterns(n, k);
      break;
    case Family::PlanarRook:
    case Family::Rook:
      pats = rook_patterns(n, k);
      break;
    default:
      throw std::invalid_argument(
          "gram_matrix: patterns do not determine the elements of this "
          "family (nontrivial H-classes); use gram_matrix_cell where the "
          "H-classes are trivial");
  }
  if (pats.size() > kGramSideGuard)
    throw resource_error("gram_matrix: side " + std::to_string(pats.size()) +
                         " exceeds the guard " +
                         std::to_string(kGramSideGuard));
  if (pats.empty()) throw std::logic_error("gram_matrix: no patterns");
  std::vector<Diagram> l;
  l.reserve(pats.size());
  for (const Pattern& p : pats) l.push_back(pattern_element(n, p, pats[0]));
  const Diagram& e = l[0];
  if (compose(e, e) != e)
    throw std::logic_error("gram_matrix: base element is not idempotent");
  IntMatrix P(pats.size(), pats.size());
  if (parallel) {
#ifdef DMW_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(l.size()); ++i) {
      auto si = static_cast<size_t>(i);
      Diagram ri = star(l[si]);
      for (size_t j = 0; j < l.size(); ++j)
        P.at(si, j) = (compose(l[j], ri) == e) ? 1 : 0;
    }
  } else {
    for (size_t i = 0; i < l.size(); ++i) {
      Diagram ri = star(l[i]);
      for (size_t j = 0; j < l.size(); ++j)
        P.at(i, j) = (compose(l[j], ri) == e) ? 1 : 0;
    }
  }
  return P;
}

IntMatrix gram_matrix_cell(const Monoid& M, const CellStructure& cs,
                           size_t cell) {
  if (cell >= cs.cells.size())
    throw std::invalid_argument("gram_matrix_cell: cell id out of range");
  const JCell& c = cs.cells[cell];
  if (!c.has_idempotent)
    throw std::invalid_argument("gram_matrix_cell: cell has no idempotent");
  if (c.h_size != 1)
    throw std::invalid_argument(
        "gram_matrix_cell: H-classes are nontrivial; entries would live in "
        "the group algebra of H(e), which this routine does not support");
  size_t e = c.idempotent;
  std::vector<size_t> ls, rs;  // R(e): one per L-class; L(e): one per R-class
  for (size_t x : c.elements) {
    if (cs.r_of[x] == cs.r_of[e]) ls.push_back(x);
    if (cs.l_of[x] == cs.l_of[e]) rs.push_back(x);
  }
  if (ls.size() > kGramSideGuard || rs.size() > kGramSideGuard)
    throw resource_error("gram_matrix_cell: side exceeds the guard");
  IntMatrix P(rs.size(), ls.size());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < ls.size(); ++j)
      P.at(i, j) = (M.mul(ls[j], rs[i]) == e) ? 1 : 0;
  return P;
}

Int gram_rank_dim(Family f, long n, long k, const FieldSpec& field,
                  bool parallel) {
  return Int(rank_int(gram_matrix(f, n, k, parallel), field, parallel));
}

// ---------------------------------------------------------------------------
// counting simple modules
// ---------------------------------------------------------------------------

std::vector<Int> count_simples(const Monoid& M, const CellStructure& cs,
                               long p, size_t max_group) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("count_simples: characteristic must be 0 or "
                                "a prime");
  std::vector<Int> out(cs.cells.size(), Int(0));
  for (size_t c = 0; c < cs.cells.size(); ++c) {
    const JCell& cell = cs.cells[c];
    if (!cell.has_idempotent) continue;
    if (cell.h_size == 1) {
      out[c] = 1;
      continue;
    }
    if (cell.h_size > max_group)
      throw resource_error("count_simples: H-class of size " +
                           std::to_string(cell.h_size) +
                           " exceeds the guard");
    TableMonoid G = group_of(M, cs, cell.idempotent);
    std::vector<std::vector<size_t>> classes = conjugacy_classes(G);
    if (p == 0) {
      out[c] = Int(classes.size());
    } else {
      long cnt = 0;
      for (const auto& cls : classes)
        if (element_order(G, cls[0]) % static_cast<size_t>(p) != 0) ++cnt;
      out[c] = Int(cnt);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gap machinery
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const Rat& v) {
  Rat r(v);
  r.canonicalize();
  return r.get_str();
}

GapValue exact_value(Int v, std::string source) {
  GapValue g;
  g.value = Rat(std::move(v));
  g.status = BoundStatus::Exact;
  g.source = std::move(source);
  return g;
}

GapValue bound_value(Rat v, std::string source) {
  GapValue g;
  g.value = std::move(v);
  g.value.canonicalize();
  g.status = BoundStatus::LowerBound;
  g.source = std::move(source);
  return g;
}

GapValue unknown_value(std::string source) {
  GapValue g;
  g.status = BoundStatus::Unknown;
  g.source = std::move(source);
  return g;
}

GapValue infinite_value(std::string source) {
  GapValue g;
  g.infinite = true;
  g.status = BoundStatus::Exact;
  g.source = std::move(source);
  return g;
}

GapValue trivial_monoid_value() {
  return exact_value(Int(0), "trivial monoid ((-1)-trivial convention)");
}

// Does the monoid admit a nonsplit extension between the two trivial
// representations in characteristic p?  Decided by the four ext dimensions.
bool has_trivial_extension(const Monoid& M, long p) {
  FieldSpec fs{p};
  for (OneDimRep X : {OneDimRep::Trivial, OneDimRep::UnitsIndicator})
    for (OneDimRep Y : {OneDimRep::Trivial, OneDimRep::UnitsIndicator})
      if (ext_dim(M, fs, X, Y) > 0) return true;
  return false;
}

constexpr size_t kExtCheckGuard = 2500;

// Smallest width of the same parity as n that is <= k (normalising a
// truncation cap to the widths that actually occur in TL_n).
long tl_effective_cap(long n, long k) {
  if (k > n) return n;
  return ((n - k) % 2 == 0) ? k : k - 1;
}

}  // namespace

std::string ratio_string(const GapValue& v, const Int& size) {
  if (v.infinite) return "infinity";
  Rat val(v.value);
  val.canonicalize();
  std::string exact = val.get_den() == 1
                          ? val.get_num().get_str()
                          : "(" + val.get_str() + ")";
  return exact + "/sqrt(" + size.get_str() + ") ~ " +
         ratio_decimal(val, size);
}

GapValue gap_tl(long n, std::optional<long> trunc_k, long p) {
  validate_adic_base(p);
  if (n < 0) throw std::invalid_argument("gap_tl: negative degree");
  if (n <= 1) return trivial_monoid_value();
  bool truncated = trunc_k.has_value() && *trunc_k < n;
  long cap = truncated ? tl_effective_cap(n, *trunc_k) : n;
  if (truncated && cap < 0)
    throw std::invalid_argument("gap_tl: truncation cap below every width");
  // nontrivial apexes: widths l with 2 <= l <= cap, and l < n when the
  // monoid is untruncated (the top cell carries 1_b, the bottom width 1_t).
  long hi = truncated ? cap : n - 2;
  std::optional<Int> min_simple;
  for (long l = (n % 2 == 0) ? 2 : 3; l <= hi; l += 2) {
    Int d = simple_dim_tl(n, l, p);
    if (d == 0)
      throw std::logic_error("gap_tl: simple dimension evaluated to zero");
    if (!min_simple || d < *min_simple) min_simple = d;
  }
  // For n >= 5 (and truncation caps >= 3) the trivial-by-trivial extensions
  // vanish; otherwise decide them by a direct derivation computation.
  bool theorem_split = (n >= 5) && (!truncated || cap >= 3);
  if (theorem_split) {
    if (!min_simple)
      return infinite_value("table-formula (no nontrivial simples)");
    return exact_value(*min_simple, "table-formula");
  }
  // A simple of dimension <= 2 already decides the gap: an extension could
  // only lower it to 2.
  if (min_simple && *min_simple <= 2)
    return exact_value(*min_simple, "table-formula");
  // Count the elements first so we never enumerate past the guard.
  Int size_needed = 0;
  for (long w = n % 2; w <= n; w += 2)
    size_needed += tl_cell_dim(n, (n - w) / 2) * tl_cell_dim(n, (n - w) / 2);
  if (size_needed > static_cast<long>(kExtCheckGuard))
    return unknown_value("extension spaces beyond the computable range");
  auto base = std::make_shared<DiagramMonoid>(Family::TL, static_cast<int>(n));
  bool ext;
  if (truncated) {
    CellStructure cs = green_cells(*base);
    std::optional<size_t> low = cell_of_width(*base, cs, static_cast<int>(cap));
    if (!low) throw std::logic_error("gap_tl: missing truncation cell");
    auto tr = std::make_shared<TruncationMonoid>(
        truncate(base, cs, low, std::nullopt));
    ext = has_trivial_extension(*tr, p);
  } else {
    ext = has_trivial_extension(*base, p);
  }
  if (ext) return exact_value(Int(2), "derivation check (nonsplit extension)");
  if (!min_simple)
    return infinite_value("derivation check (every module is a trivial sum)");
  return exact_value(*min_simple, "table-formula + derivation check");
}

GapValue gap_prook(long n) {
  if (n < 0) throw std::invalid_argument("gap_prook: negative degree");
  if (n == 0) return trivial_monoid_value();
  if (n == 1)
    return infinite_value(
        "table-formula (semisimple, no nontrivial simples)");
  return exact_value(Int(n), "table-formula (semisimple over every field)");
}

GapValue gap_prook_truncated(long n, long k, long l) {
  if (n < 1 || k < 1 || l > n || k >= l)
    throw std::invalid_argument(
        "gap_prook_truncated: need 1 <= k < l <= n");
  Int v = binomial(n, k);
  Int w = binomial(n, l - 1);
  return exact_value(v < w ? v : w,
                     "table-formula (semisimple over every field)");
}

GapValue ssgap_planar(Family f, long n, std::optional<long> trunc_k) {
  if (f != Family::TL && f != Family::Motzkin && f != Family::PlanarRook &&
      f != Family::PlanarPartition)
    throw std::invalid_argument(
        "ssgap_planar: only the trivial-H families are supported");
  if (n < 0) throw std::invalid_argument("ssgap_planar: negative degree");
  if (n == 0) return trivial_monoid_value();
  std::vector<int> widths = family_apex_widths(f, static_cast<int>(n));
  std::sort(widths.begin(), widths.end());
  long minw = widths.front();
  bool truncated = trunc_k.has_value() && *trunc_k < n;
  std::optional<Int> best;
  for (int w : widths) {
    if (w == minw) continue;                    // apex of 1_t
    if (truncated && w > *trunc_k) continue;    // crushed away
    if (!truncated && w == n) continue;         // apex of 1_b (units)
    Int d = ssdim(f, n, w);
    if (!best || d < *best) best = d;
  }
  if (!best)
    return infinite_value("table-formula (no nontrivial simples)");
  return exact_value(*best, "table-formula");
}

// ---------------------------------------------------------------------------
// cyclic groups
// ---------------------------------------------------------------------------

GapValue cyclic_gap_rational(long n) {
  if (n < 1) throw std::invalid_argument("cyclic_gap_rational: n < 1");
  if (n == 1) return trivial_monoid_value();
  long best = 0;
  for (auto [r, e] : factor_int(n)) {
    (void)e;
    if (best == 0 || r - 1 < best) best = r - 1;
  }
  return exact_value(Int(best), "table-formula (cyclotomic degrees)");
}

GapValue cyclic_gap_fq(long n, long p, long deg) {
  if (n < 1) throw std::invalid_argument("cyclic_gap_fq: n < 1");
  if (!is_prime(p) || deg < 1)
    throw std::invalid_argument("cyclic_gap_fq: q must be a prime power");
  if (n == 1) return trivial_monoid_value();
  // q and q^d are only ever used mod n, so reduce as we go.
  long q_mod = 1;
  for (long i = 0; i < deg; ++i) q_mod = (q_mod * (p % n)) % n;
  auto gcd_with_n = [&](long x) { return std::gcd(n, ((x % n) + n) % n); };
  if (gcd_with_n(q_mod - 1) > 1)
    return exact_value(Int(1), "table-formula (nontrivial character)");
  if (n % p == 0)
    return exact_value(Int(2), "table-formula (unipotent extension)");
  long qd = 1;
  for (long d = 1; d <= n + 1; ++d) {
    qd = (qd * q_mod) % n;
    if (gcd_with_n(qd - 1) > 1)
      return exact_value(Int(d), "table-formula (splitting field degree)");
  }
  throw std::logic_error("cyclic_gap_fq: no splitting degree found");
}

GapValue cyclic_faith_rational(long n) {
  if (n < 1) throw std::invalid_argument("cyclic_faith_rational: n < 1");
  if (n == 1)
    return exact_value(Int(0), "trivial group (empty representation)");
  Int total = 0;
  for (auto [r, e] : factor_int(n)) {
    Int pe = pow_int(Int(r), static_cast<unsigned long>(e));
    total += pe - pe / r;  // phi(r^e)
  }
  // For n = 2m with m odd > 1 the phi(2) = 1 summand is wasted: the
  // primitive character's rational piece has dimension phi(2m) = phi(m)
  // and is already faithful on the 2-part.
  if (n % 4 == 2 && n > 2) total -= 1;
  return exact_value(total, "table-formula (primary cyclotomic pieces)");
}

// ---------------------------------------------------------------------------
// theorem-driven bounds
// ---------------------------------------------------------------------------

namespace {

long floor_2sqrt(long n) { return isqrt_floor(4 * n); }

// T1: n >= 5, k <= 2 sqrt(n).  gap >= 4/((n+2s+2)(n+2s+4)) binom(n, n/2-s).
Rat tl_gap_bound_t1(long n) {
  long s = isqrt_floor(n);
  Rat r = Rat(4, (n + 2 * s + 2) * (n + 2 * s + 4)) *
          Rat(binomial(n, n / 2 - s));
  r.canonicalize();
  return r;
}

// T2: n >= 8, 2 sqrt(n) <= k <= n - sqrt(n), u = floor(sqrt(n)/2).
Rat tl_gap_bound_t2(long n) {
  long u = isqrt_floor(n) / 2;
  Rat r = Rat(binomial(n, u)) / Rat((n - u + 1) * (n - u + 2));
  r.canonicalize();
  return r;
}

Rat tl_ssgap_bound_t1(long n) {
  Rat r = Rat(binomial(n, n / 2)) / n;
  r.canonicalize();
  return r;
}

Rat tl_ssgap_bound_t2(long n) {
  long u = isqrt_floor(n) / 2;
  return Rat(tl_cell_dim(n, u));
}

Rat tl_faith_bound(long n) {
  long np = (n % 2 == 0) ? n : n - 1;
  Rat r = Rat(6, n + 4) * Rat(binomial(n, np / 2 - 1));
  r.canonicalize();
  return r;
}

// Which bound regime covers (n, k)?  0 = none, 1 = T1, 2 = T2.
int tl_regime(long n, long k) {
  if (n >= 5 && k <= floor_2sqrt(n)) return 1;
  if (n >= 8 && k >= floor_2sqrt(n) && k <= n - isqrt_floor(n)) return 2;
  return 0;
}

struct TlBounds {
  GapValue gap, ssgap, faith;
};

TlBounds tl_bounds(long n, long k, long ch) {
  TlBounds out;
  int regime = tl_regime(n, k);
  if (regime == 0) {
    out.gap = unknown_value("no bound regime covers this (n, k)");
    out.ssgap = out.gap;
    out.faith = out.gap;
    return out;
  }
  if (ch == 0)
    out.gap = bound_value(regime == 1 ? tl_gap_bound_t1(n)
                                      : tl_gap_bound_t2(n),
                          "bound");
  else
    out.gap = unknown_value("gap bound stated for characteristic 0");
  out.ssgap = bound_value(
      regime == 1 ? tl_ssgap_bound_t1(n) : tl_ssgap_bound_t2(n),
      "bound (any field)");
  if (ch == 0)
    out.faith = bound_value(tl_faith_bound(n), "bound");
  else
    out.faith = unknown_value("faithfulness bound stated for characteristic 0");
  return out;
}

Int tl_trunc_size(long n, long cap) {
  Int size = 1;  // fresh unit
  for (long w = n % 2; w <= cap; w += 2) {
    Int d = tl_cell_dim(n, (n - w) / 2);
    size += d * d;
  }
  return size;
}

Int motzkin_trunc_size(long n, long cap) {
  Int size = 1;
  for (long w = 0; w <= cap; ++w) {
    Int d = ssdim(Family::Motzkin, n, w);
    size += d * d;
  }
  return size;
}

bool char_divides_factorial(long ch, long n) { return ch != 0 && ch <= n; }

std::string trunc_name(Family f, long n, long k) {
  std::ostringstream os;
  os << family_name(f) << "_" << n << " truncated at width " << k;
  return os.str();
}

}  // namespace

Rat tl_gap_bound_corridor_sq(long n) {
  Rat bound = tl_gap_bound_t1(n);
  Rat r2 = bound * bound * Rat(Int(n) * n * n * n * n);
  Int four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  r2 /= Rat(four_n);
  r2.canonicalize();
  return r2;
}

GapReport gap_bounds(Family f, long n, std::optional<long> trunc_k,
                     long characteristic) {
  if (n < 1) throw std::invalid_argument("gap_bounds: degree < 1");
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("gap_bounds: characteristic must be 0 or a "
                                "prime");
  long ch = characteristic;
  GapReport rep;
  rep.characteristic = ch;
  long k = trunc_k.value_or(floor_2sqrt(n));
  if (k < 0) throw std::invalid_argument("gap_bounds: negative width");
  switch (f) {
    case Family::TL: {
      long cap = tl_effective_cap(n, k);
      rep.monoid = trunc_name(f, n, k);
      rep.size = tl_trunc_size(n, cap);
      TlBounds b = tl_bounds(n, k, ch);
      rep.gap = b.gap;
      rep.ssgap = b.ssgap;
      rep.faith = b.faith;
      return rep;
    }
    case Family::Motzkin: {
      rep.monoid = trunc_name(f, n, k);
      rep.size = motzkin_trunc_size(n, std::min(k, n));
      TlBounds b = tl_bounds(n - 1, k, ch);
      rep.gap = unknown_value(
          "open: expected to dominate the bound for the one-strand-smaller "
          "planar matchings, unproven");
      rep.ssgap = b.ssgap;
      if (rep.ssgap.status == BoundStatus::LowerBound)
        rep.ssgap.source += " via the planar submonoid at degree n-1";
      rep.faith = b.faith;
      if (rep.faith.status == BoundStatus::LowerBound)
        rep.faith.source += " via the planar submonoid at degree n-1";
      return rep;
    }
    case Family::Brauer: {
      long cap = tl_effective_cap(n, k);
      rep.monoid = trunc_name(f, n, k);
      Int size = 1;
      for (long w = n % 2; w <= cap; w += 2) {
        Int d = binomial(n, w) * double_factorial(n - w - 1);
        size += d * d * factorial(w);
      }
      rep.size = size;
      if (ch == 2) {
        rep.gap = unknown_value("requires characteristic != 2");
        rep.ssgap = rep.gap;
        rep.faith = rep.gap;
        return rep;
      }
      GapValue tl_gap = gap_tl(n, cap, ch);
      if (tl_gap.status == BoundStatus::Exact && !tl_gap.infinite) {
        rep.gap = bound_value(tl_gap.value,
                              "bound via the planar matchings inside");
      } else {
        TlBounds b = tl_bounds(n, k, ch);
        rep.gap = b.gap;
        if (rep.gap.status == BoundStatus::LowerBound)
          rep.gap.source += " via the planar matchings inside";
      }
      GapValue tl_ss = ssgap_planar(Family::TL, n, cap);
      if (!tl_ss.infinite) {
        rep.ssgap = bound_value(
            tl_ss.value,
            "bound via the planar matchings inside; in the regime k <= 2 "
            "sqrt(n), n large, also >= (n-1)!! = " +
                double_factorial(n - 1).get_str());
      } else {
        rep.ssgap = unknown_value("no nontrivial simples in the planar part");
      }
      TlBounds b = tl_bounds(n, k, ch);
      rep.faith = b.faith;
      if (rep.faith.status == BoundStatus::LowerBound)
        rep.faith.source += " via the planar matchings inside";
      return rep;
    }
    case Family::PlanarRook:
    case Family::Rook: {
      long l = trunc_k.value_or(floor_2sqrt(n));
      if (l < 1 || 2 * l >= n) {
        rep.monoid = family_name(f) + std::string("_") + std::to_string(n);
        rep.size = family_cardinality(f, static_cast<int>(n));
        rep.gap = unknown_value(
            "the two-sided truncation window needs 1 <= l < n - l");
        rep.ssgap = rep.gap;
        rep.faith = rep.gap;
        return rep;
      }
      std::ostringstream os;
      os << family_name(f) << "_" << n << " with kept widths [" << l + 1
         << ", " << n - l << "]";
      rep.monoid = os.str();
      Int size = 2;  // fresh unit and zero
      for (long w = l + 1; w <= n - l; ++w) {
        Int d = binomial(n, w);
        size += d * d * (f == Family::Rook ? factorial(w) : Int(1));
      }
      rep.size = size;
      GapValue exact = gap_prook_truncated(n, l, n - l);
      if (f == Family::PlanarRook) {
        rep.gap = exact;
        rep.ssgap = exact;
      } else {
        if (char_divides_factorial(ch, n)) {
          rep.gap = unknown_value("requires a characteristic not dividing n!");
          rep.ssgap = rep.gap;
          rep.faith = rep.gap;
          return rep;
        }
        rep.gap = bound_value(exact.value, "bound via the planar part");
        rep.ssgap = exact_value(Int(exact.value.get_num()),
                                "table-formula (equal to the planar value)");
      }
      if (l == floor_2sqrt(n)) {
        Int root = kth_root_ceil(binomial(n, n / 2), 2 * isqrt_floor(n) + 1);
        rep.faith = bound_value(Rat(root), "bound (tensor-power argument)");
      } else {
        rep.faith = unknown_value(
            "faithfulness bound stated for the default window l = "
            "floor(2 sqrt(n))");
      }
      return rep;
    }
    case Family::RookBrauer: {
      rep.monoid = trunc_name(f, n, k);
      Int size = 1;
      for (long w = 0; w <= std::min(k, n); ++w) {
        Int d = ssdim(Family::RookBrauer, n, w);
        size += d * d * factorial(w);
      }
      rep.size = size;
      if (char_divides_factorial(ch, n)) {
        rep.gap = unknown_value("requires a characteristic not dividing n!");
        rep.ssgap = rep.gap;
        rep.faith = rep.gap;
        return rep;
      }
      rep.gap = unknown_value("open (extensions uncontrolled)");
      GapValue mo = ssgap_planar(Family::Motzkin, n, std::min(k, n));
      if (!mo.infinite) {
        Int invol = 0;
        for (long t = 0; 2 * t <= n; ++t)
          invol += binomial(n, 2 * t) * double_factorial(2 * t - 1);
        rep.ssgap = bound_value(
            mo.value,
            "bound via the partial planar matchings inside; in the regime "
            "k <= 2 sqrt(n), n large, also >= " +
                invol.get_str());
      } else {
        rep.ssgap = unknown_value("no nontrivial simples in the planar part");
      }
      TlBounds b = tl_bounds(n - 1, k, ch);
      rep.faith = b.faith;
      if (rep.faith.status == BoundStatus::LowerBound)
        rep.faith.source +=
            " via the partial planar matchings and their planar core";
      return rep;
    }
    case Family::PlanarPartition: {
      long cap = std::min(k, n);
      rep.monoid = trunc_name(f, n, k);
      Int size = 1;
      for (long w = 0; w <= cap; ++w) {
        Int d = tl_cell_dim(2 * n, n - w);
        size += d * d;
      }
      rep.size = size;
      GapValue g = gap_tl(2 * n, 2 * cap, ch);
      g.source += " (via the isomorphism with the planar matchings on 2n)";
      rep.gap = g;
      rep.ssgap = ssgap_planar(Family::PlanarPartition, n, cap);
      TlBounds b = tl_bounds(2 * n, 2 * cap, ch);
      rep.faith = b.faith;
      if (rep.faith.status == BoundStatus::LowerBound)
        rep.faith.source +=
            " via the isomorphism with the planar matchings on 2n";
      return rep;
    }
    case Family::Partition: {
      long cap = std::min(k, n);
      rep.monoid = trunc_name(f, n, k);
      Int size = 1;
      for (long w = 0; w <= cap; ++w) {
        Int d = ssdim(Family::Partition, n, w);
        size += d * d * factorial(w);
      }
      rep.size = size;
      if (char_divides_factorial(ch, n)) {
        rep.gap = unknown_value("requires a characteristic not dividing n!");
        rep.ssgap = rep.gap;
        rep.faith = rep.gap;
        return rep;
      }
      rep.gap = unknown_value("open (extensions uncontrolled)");
      GapValue pp = ssgap_planar(Family::PlanarPartition, n, cap);
      if (!pp.infinite) {
        rep.ssgap = bound_value(
            pp.value,
            "bound via the planar partitions inside; in the regime k <= 2 "
            "sqrt(n), n large, also >= " +
                bell(n).get_str());
      } else {
        rep.ssgap = unknown_value("no nontrivial simples in the planar part");
      }
      TlBounds b = tl_bounds(2 * n, 2 * cap, ch);
      rep.faith = b.faith;
      if (rep.faith.status == BoundStatus::LowerBound)
        rep.faith.source += " via the planar partitions inside";
      return rep;
    }
    case Family::Symmetric: {
      rep.monoid = std::string(family_name(f)) + "_" + std::to_string(n);
      rep.size = factorial(n);
      if (trunc_k.has_value())
        throw std::invalid_argument(
            "gap_bounds: the symmetric group has a single J-cell; there is "
            "nothing to truncate");
      if (ch != 0) {
        rep.gap = unknown_value("reported for characteristic 0 only");
        rep.ssgap = rep.gap;
        rep.faith = rep.gap;
        return rep;
      }
      if (n == 1) {
        rep.gap = trivial_monoid_value();
        rep.ssgap = rep.gap;
        rep.faith = exact_value(Int(0), "trivial group");
        return rep;
      }
      rep.gap = exact_value(Int(1), "table-formula (sign character)");
      rep.ssgap = rep.gap;
      rep.faith =
          exact_value(Int(n - 1), "table-formula (standard representation)");
      return rep;
    }
  }
  throw std::invalid_argument("gap_bounds: unknown family");
}

// ---------------------------------------------------------------------------
// Burnside-Brauer
// ---------------------------------------------------------------------------

std::vector<Int> irreducible_dims(const TableMonoid& G) {
  size_t m = G.size();
  std::vector<std::vector<size_t>> classes = conjugacy_classes(G);
  size_t c = classes.size();
  // number of one-dimensional representations = index of the derived
  // subgroup (normal closure of the commutators)
  std::vector<char> in_derived(m, 0);
  std::vector<size_t> stack;
  std::vector<size_t> inverse(m);
  for (size_t g = 0; g < m; ++g)
    for (size_t h = 0; h < m; ++h)
      if (G.mul(g, h) == G.unit()) inverse[g] = h;
  auto push = [&](size_t x) {
    if (!in_derived[x]) {
      in_derived[x] = 1;
      stack.push_back(x);
    }
  };
  for (size_t g = 0; g < m; ++g)
    for (size_t h = 0; h < m; ++h)
      push(G.mul(G.mul(inverse[g], inverse[h]), G.mul(g, h)));
  while (!stack.empty()) {
    size_t x = stack.back();
    stack.pop_back();
    for (size_t g = 0; g < m; ++g) {
      push(G.mul(G.mul(g, x), inverse[g]));  // normality
      if (in_derived[g]) push(G.mul(x, g));  // closure
    }
  }
  size_t derived = 0;
  for (char b : in_derived) derived += b;
  size_t ones = m / derived;
  if (ones > c)
    throw std::logic_error("irreducible_dims: inconsistent class count");
  // enumerate multisets: `ones` forced 1s, the rest >= 2, each dividing m,
  // squares summing to m
  std::vector<long> divs;
  for (long d = 2; static_cast<size_t>(d) * d <= m; ++d)
    if (m % static_cast<size_t>(d) == 0) divs.push_back(d);
  std::vector<std::vector<long>> solutions;
  std::vector<long> cur;
  long remaining = static_cast<long>(m) - static_cast<long>(ones);
  std::function<void(size_t, long, size_t)> rec = [&](size_t di, long left,
                                                      size_t slots) {
    if (solutions.size() > 1) return;
    if (slots == 0) {
      if (left == 0) solutions.push_back(cur);
      return;
    }
    for (size_t i = di; i < divs.size(); ++i) {
      long sq = divs[i] * divs[i];
      if (sq > left) break;
      cur.push_back(divs[i]);
      rec(i, left - sq, slots - 1);
      cur.pop_back();
    }
  };
  rec(0, remaining, c - ones);
  if (solutions.size() != 1)
    throw std::logic_error(
        "irreducible_dims: the counting constraints admit " +
        std::to_string(solutions.size()) + " dimension multisets");
  std::vector<Int> out(ones, Int(1));
  for (long d : solutions[0]) out.push_back(Int(d));
  return out;
}

BurnsideReport burnside_brauer_bound(const Monoid& M,
                                     const CellStructure& cs) {
  BurnsideReport rep;
  rep.class_total = Int(conjugacy_class_total(M, cs));
  Int max_dim = 0;
  bool heuristic = false;
  for (size_t c = 0; c < cs.cells.size(); ++c) {
    const JCell& cell = cs.cells[c];
    if (!cell.has_idempotent) continue;
    Int l_over_h = Int(cell.elements.size() / cell.num_l) / Int(cell.h_size);
    Int group_max = 1;
    if (cell.h_size > 1) {
      heuristic = true;  // ssdim proxy: an upper bound for the true maximum
      try {
        std::vector<Int> dims = irreducible_dims(group_of(M, cs, cell.idempotent));
        group_max = dims.back();
      } catch (const std::logic_error&) {
        group_max = Int(isqrt_floor(static_cast<long>(cell.h_size)));
      }
    } else {
      heuristic = true;  // |L|/|H| still only bounds the simple dimension
    }
    Int cand = l_over_h * group_max;
    if (cand > max_dim) max_dim = cand;
  }
  rep.max_dim = max_dim;
  rep.heuristic = heuristic;
  if (rep.class_total <= 1) {
    rep.note = "single class: the tensor-power argument gives no bound";
    return rep;
  }
  long cl = static_cast<long>(rep.class_total.get_si());
  rep.bound = kth_root_ceil(max_dim, cl - 1);
  rep.note = heuristic
                 ? "largest dimension is the semisimple proxy (upper bound); "
                   "treat the faithfulness bound as heuristic"
                 : "";
  return rep;
}

// ---------------------------------------------------------------------------
// field complexity
// ---------------------------------------------------------------------------

double field_complexity(const Int& dim, const Int& q) {
  if (q < 2) throw std::invalid_argument("field_complexity: q < 2");
  if (!q.fits_slong_p())
    throw std::invalid_argument("field_complexity: q out of range");
  long ql = q.get_si();
  auto fac = factor_int(ql);
  if (fac.size() != 1)
    throw std::invalid_argument("field_complexity: q must be a prime power");
  return mpz_get_d(dim.get_mpz_t()) * std::log2(static_cast<double>(ql));
}

}  // namespace dmw
