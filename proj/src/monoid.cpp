// monoid.cpp — finite monoid engine.  See LICENSE.
#include "dmw/monoid.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dmw {

namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<size_t> Monoid::generators() const {
  std::vector<size_t> g(size());
  std::iota(g.begin(), g.end(), size_t{0});
  return g;
}

// ---------------------------------------------------------------------------
// TableMonoid
// ---------------------------------------------------------------------------

TableMonoid::TableMonoid(size_t m, size_t unit, std::vector<uint32_t> table,
                         std::vector<std::string> labels)
    : m_(m), unit_(unit), table_(std::move(table)), labels_(std::move(labels)) {
  if (m_ == 0) throw std::invalid_argument("TableMonoid: no elements");
  if (unit_ >= m_) throw std::invalid_argument("TableMonoid: unit out of range");
  if (table_.size() != m_ * m_)
    throw std::invalid_argument("TableMonoid: table must have size*size entries");
  if (!labels_.empty() && labels_.size() != m_)
    throw std::invalid_argument("TableMonoid: one label per element required");
  for (uint32_t v : table_)
    if (v >= m_) throw std::invalid_argument("TableMonoid: entry out of range");
  for (size_t x = 0; x < m_; ++x)
    if (mul(unit_, x) != x || mul(x, unit_) != x)
      throw std::invalid_argument("TableMonoid: unit law fails");
  auto check = [&](size_t a, size_t b, size_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("TableMonoid: not associative");
  };
  if (m_ <= 512) {
    for (size_t a = 0; a < m_; ++a)
      for (size_t b = 0; b < m_; ++b)
        for (size_t c = 0; c < m_; ++c) check(a, b, c);
  } else {
    uint64_t state = 0;  // fixed seed: the check must be reproducible
    for (int i = 0; i < 200000; ++i) {
      size_t a = splitmix64(state) % m_;
      size_t b = splitmix64(state) % m_;
      size_t c = splitmix64(state) % m_;
      check(a, b, c);
    }
  }
}

std::string TableMonoid::label(size_t a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

void write_table(const TableMonoid& M, std::ostream& os) {
  const size_t m = M.size();
  os << m << ' ' << M.unit() << '\n';
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) os << M.mul(a, b) << (b + 1 < m ? ' ' : '\n');
}

TableMonoid read_table(std::istream& is) {
  size_t m = 0, unit = 0;
  if (!(is >> m >> unit)) throw std::invalid_argument("table: bad header");
  if (m == 0 || m > 5000) throw std::invalid_argument("table: unsupported size");
  std::vector<uint32_t> t(m * m);
  for (auto& v : t) {
    unsigned long x;
    if (!(is >> x)) throw std::invalid_argument("table: too few entries");
    if (x >= m) throw std::invalid_argument("table: entry out of range");
    v = static_cast<uint32_t>(x);
  }
  return TableMonoid(m, unit, std::move(t));
}

// ---------------------------------------------------------------------------
// DiagramMonoid
// ---------------------------------------------------------------------------

DiagramMonoid::DiagramMonoid(Family f, int n, const EnumGuard& guard)
    : family_(f), n_(n), elems_(enumerate_family(f, n, guard)) {
  index_.reserve(elems_.size() * 2);
  for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  unit_ = index_of(Diagram::identity(n));
  for (const auto& g : family_generators(f, n)) {
    size_t gi = index_of(g);
    if (gi != unit_) gen_indices_.push_back(gi);
  }
  std::sort(gen_indices_.begin(), gen_indices_.end());
  gen_indices_.erase(std::unique(gen_indices_.begin(), gen_indices_.end()),
                     gen_indices_.end());
}

size_t DiagramMonoid::index_of(const Diagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end())
    throw std::invalid_argument("diagram not in this monoid: " + d.to_string());
  return it->second;
}

size_t DiagramMonoid::mul(size_t a, size_t b) const {
  auto it = index_.find(compose(elems_[a], elems_[b]));
  if (it == index_.end())
    throw std::logic_error("diagram family not closed under composition");
  return it->second;
}

// ---------------------------------------------------------------------------
// TransformationMonoid
// ---------------------------------------------------------------------------

TransformationMonoid::TransformationMonoid(int n) : n_(n) {
  if (n < 1 || n > 7)
    throw resource_error("transformation monoid: degree must be 1..7");
  pow_.assign(static_cast<size_t>(n) + 1, 1);
  for (int i = 0; i < n; ++i) pow_[i + 1] = pow_[i] * static_cast<size_t>(n);
  size_ = pow_[n];
  unit_ = 0;
  for (int i = 0; i < n; ++i) unit_ += static_cast<size_t>(i) * pow_[i];
}

std::vector<int> TransformationMonoid::values(size_t a) const {
  std::vector<int> f(n_);
  for (int i = 0; i < n_; ++i)
    f[i] = static_cast<int>((a / pow_[i]) % static_cast<size_t>(n_));
  return f;
}

size_t TransformationMonoid::index_of(const std::vector<int>& f) const {
  if (static_cast<int>(f.size()) != n_)
    throw std::invalid_argument("transformation: wrong arity");
  size_t a = 0;
  for (int i = 0; i < n_; ++i) {
    if (f[i] < 0 || f[i] >= n_)
      throw std::invalid_argument("transformation: value out of range");
    a += static_cast<size_t>(f[i]) * pow_[i];
  }
  return a;
}

size_t TransformationMonoid::mul(size_t a, size_t b) const {
  // (a after b)(i) = a(b(i))
  size_t r = 0;
  const size_t n = static_cast<size_t>(n_);
  for (int i = 0; i < n_; ++i) {
    const size_t bi = (b / pow_[i]) % n;
    const size_t ai = (a / pow_[bi]) % n;
    r += ai * pow_[i];
  }
  return r;
}

std::string TransformationMonoid::label(size_t a) const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string((a / pow_[i]) % static_cast<size_t>(n_));
  }
  return s + "]";
}

std::vector<size_t> TransformationMonoid::generators() const {
  if (n_ == 1) return {};
  std::vector<int> cycle(n_), swap01(n_), collapse(n_);
  for (int i = 0; i < n_; ++i) cycle[i] = (i + 1) % n_;
  for (int i = 0; i < n_; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  for (int i = 0; i < n_; ++i) collapse[i] = i;
  collapse[0] = 1;
  std::vector<size_t> g{index_of(cycle), index_of(swap01), index_of(collapse)};
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

// ---------------------------------------------------------------------------
// cyclic monoids, tables, opposites
// ---------------------------------------------------------------------------

TableMonoid cyclic_monoid(long index, long period) {
  if (index < 0 || period < 1)
    throw std::invalid_argument("cyclic monoid: need index >= 0, period >= 1");
  const long s = index + period;
  if (s > 5000) throw resource_error("cyclic monoid: too many elements");
  const size_t m = static_cast<size_t>(s);
  std::vector<uint32_t> t(m * m);
  std::vector<std::string> labels(m);
  for (long x = 0; x < s; ++x) {
    labels[static_cast<size_t>(x)] = "a^" + std::to_string(x);
    for (long y = 0; y < s; ++y) {
      long e = x + y;
      if (e >= s) e = index + ((e - index) % period);
      t[static_cast<size_t>(x) * m + static_cast<size_t>(y)] =
          static_cast<uint32_t>(e);
    }
  }
  return TableMonoid(m, 0, std::move(t), std::move(labels));
}

namespace {
TableMonoid materialize(const Monoid& M, size_t max_cells, bool transposed) {
  const size_t m = M.size();
  if (m > 0 && m > max_cells / m)
    throw resource_error("multiplication table would exceed the cell budget");
  std::vector<uint32_t> t(m * m);
  std::vector<std::string> labels(m);
  for (size_t a = 0; a < m; ++a) {
    labels[a] = M.label(a);
    for (size_t b = 0; b < m; ++b)
      t[a * m + b] =
          static_cast<uint32_t>(transposed ? M.mul(b, a) : M.mul(a, b));
  }
  return TableMonoid(m, M.unit(), std::move(t), std::move(labels));
}
}  // namespace

TableMonoid to_table(const Monoid& M, size_t max_cells) {
  return materialize(M, max_cells, false);
}

TableMonoid opposite(const Monoid& M, size_t max_cells) {
  return materialize(M, max_cells, true);
}

// ---------------------------------------------------------------------------
// Green's relations
// ---------------------------------------------------------------------------

namespace {

struct Csr {
  std::vector<size_t> off;  // size n+1
  std::vector<uint32_t> adj;
};

// Iterative Tarjan; fills comp with strongly-connected-component ids.
size_t tarjan_scc(const Csr& g, std::vector<uint32_t>& comp) {
  const size_t n = g.off.size() - 1;
  std::vector<uint32_t> idx(n, kNone), low(n, 0);
  std::vector<char> on(n, 0);
  std::vector<uint32_t> stk;
  std::vector<std::pair<uint32_t, size_t>> call;  // (vertex, next edge slot)
  comp.assign(n, kNone);
  size_t count = 0;
  uint32_t next = 0;
  for (size_t root = 0; root < n; ++root) {
    if (idx[root] != kNone) continue;
    idx[root] = low[root] = next++;
    stk.push_back(static_cast<uint32_t>(root));
    on[root] = 1;
    call.emplace_back(static_cast<uint32_t>(root), g.off[root]);
    while (!call.empty()) {
      const uint32_t v = call.back().first;
      size_t& ep = call.back().second;
      bool descended = false;
      while (ep < g.off[v + 1]) {
        const uint32_t w = g.adj[ep++];
        if (idx[w] == kNone) {
          idx[w] = low[w] = next++;
          stk.push_back(w);
          on[w] = 1;
          call.emplace_back(w, g.off[w]);
          descended = true;
          break;
        }
        if (on[w] && idx[w] < low[v]) low[v] = idx[w];
      }
      if (descended) continue;
      call.pop_back();
      if (!call.empty()) {
        const uint32_t p = call.back().first;
        if (low[v] < low[p]) low[p] = low[v];
      }
      if (low[v] == idx[v]) {
        while (true) {
          const uint32_t w = stk.back();
          stk.pop_back();
          on[w] = 0;
          comp[w] = static_cast<uint32_t>(count);
          if (w == v) break;
        }
        ++count;
      }
    }
  }
  return count;
}

// Renumber component ids in order of first appearance (i.e. by smallest
// member, since elements are scanned in ascending order).
void relabel_first_seen(std::vector<uint32_t>& comp, size_t count) {
  std::vector<uint32_t> map(count, kNone);
  uint32_t next = 0;
  for (auto& c : comp) {
    if (map[c] == kNone) map[c] = next++;
    c = map[c];
  }
}

}  // namespace

CellStructure green_cells(const Monoid& M) {
  const size_t m = M.size();
  std::vector<size_t> gens = M.generators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const size_t G = gens.size();

  // left digraph x -> g*x, right digraph x -> x*g, two-sided = both
  Csr lg, rg, jg;
  lg.off.resize(m + 1);
  rg.off.resize(m + 1);
  jg.off.resize(m + 1);
  for (size_t x = 0; x <= m; ++x) {
    lg.off[x] = x * G;
    rg.off[x] = x * G;
    jg.off[x] = 2 * x * G;
  }
  lg.adj.resize(m * G);
  rg.adj.resize(m * G);
  jg.adj.resize(2 * m * G);
  for (size_t x = 0; x < m; ++x) {
    for (size_t gi = 0; gi < G; ++gi) {
      const auto l = static_cast<uint32_t>(M.mul(gens[gi], x));
      const auto r = static_cast<uint32_t>(M.mul(x, gens[gi]));
      lg.adj[x * G + gi] = l;
      rg.adj[x * G + gi] = r;
      jg.adj[2 * x * G + gi] = l;
      jg.adj[2 * x * G + G + gi] = r;
    }
  }

  CellStructure cs;
  cs.num_l = tarjan_scc(lg, cs.l_of);
  cs.num_r = tarjan_scc(rg, cs.r_of);
  cs.num_j = tarjan_scc(jg, cs.j_of);
  relabel_first_seen(cs.l_of, cs.num_l);
  relabel_first_seen(cs.r_of, cs.num_r);
  relabel_first_seen(cs.j_of, cs.num_j);

  // H-classes: nonempty (L, R) intersections, numbered by smallest member.
  cs.h_of.assign(m, kNone);
  {
    std::unordered_map<uint64_t, uint32_t> hid;
    hid.reserve(m);
    for (size_t x = 0; x < m; ++x) {
      const uint64_t key =
          (static_cast<uint64_t>(cs.l_of[x]) << 32) | cs.r_of[x];
      auto [it, fresh] = hid.emplace(key, static_cast<uint32_t>(hid.size()));
      cs.h_of[x] = it->second;
      (void)fresh;
    }
    cs.num_h = hid.size();
  }

  // condensation of the two-sided digraph, reachability, and display order:
  // units cell first, then downwards (reachable-set size descending).
  const size_t nj = cs.num_j;
  std::vector<std::vector<char>> cadj(nj, std::vector<char>(nj, 0));
  for (size_t x = 0; x < m; ++x)
    for (size_t e = jg.off[x]; e < jg.off[x + 1]; ++e)
      cadj[cs.j_of[x]][cs.j_of[jg.adj[e]]] = 1;
  std::vector<std::vector<char>> reach(nj, std::vector<char>(nj, 0));
  for (size_t s = 0; s < nj; ++s) {
    std::vector<uint32_t> stack{static_cast<uint32_t>(s)};
    reach[s][s] = 1;
    while (!stack.empty()) {
      const uint32_t v = stack.back();
      stack.pop_back();
      for (size_t w = 0; w < nj; ++w)
        if (cadj[v][w] && !reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(static_cast<uint32_t>(w));
        }
    }
  }
  std::vector<uint32_t> order(nj);
  std::iota(order.begin(), order.end(), 0u);
  auto reach_count = [&](uint32_t c) {
    return std::count(reach[c].begin(), reach[c].end(), char(1));
  };
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    const auto ra = reach_count(a), rb = reach_count(b);
    if (ra != rb) return ra > rb;
    return a < b;
  });
  std::vector<uint32_t> newid(nj);
  for (size_t i = 0; i < nj; ++i) newid[order[i]] = static_cast<uint32_t>(i);
  for (auto& c : cs.j_of) c = newid[c];
  cs.jreach.assign(nj, std::vector<char>(nj, 0));
  for (size_t a = 0; a < nj; ++a)
    for (size_t b = 0; b < nj; ++b)
      cs.jreach[newid[a]][newid[b]] = reach[a][b];

  cs.units_cell = cs.j_of[M.unit()];
  if (cs.units_cell != 0)
    throw std::logic_error("green_cells: units cell must sort first");

  // per-cell data
  cs.cells.assign(nj, JCell{});
  for (size_t x = 0; x < m; ++x) cs.cells[cs.j_of[x]].elements.push_back(x);
  for (auto& cell : cs.cells) {
    std::vector<uint32_t> ls, rs;
    for (size_t x : cell.elements) {
      ls.push_back(cs.l_of[x]);
      rs.push_back(cs.r_of[x]);
      if (!cell.has_idempotent && M.mul(x, x) == x) {
        cell.has_idempotent = true;
        cell.idempotent = x;
      }
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    cell.num_l = ls.size();
    cell.num_r = rs.size();
    const size_t boxes = cell.num_l * cell.num_r;
    if (boxes == 0 || cell.elements.size() % boxes != 0)
      throw std::logic_error("green_cells: ragged eggbox");
    cell.h_size = cell.elements.size() / boxes;
  }
  return cs;
}

int cell_width(const DiagramMonoid& M, const CellStructure& cs, size_t cell) {
  if (cell >= cs.cells.size() || cs.cells[cell].elements.empty())
    throw std::invalid_argument("no such cell");
  return width(M.at(cs.cells[cell].elements.front()));
}

std::optional<size_t> cell_of_width(const DiagramMonoid& M,
                                    const CellStructure& cs, int w) {
  for (size_t c = 0; c < cs.cells.size(); ++c)
    if (cell_width(M, cs, c) == w) return c;
  return std::nullopt;
}

std::vector<char> unit_mask(const Monoid& M) {
  const size_t m = M.size();
  const size_t e = M.unit();
  std::vector<char> um(m, 0);
  for (size_t u = 0; u < m; ++u)
    for (size_t v = 0; v < m; ++v)
      if (M.mul(u, v) == e) {  // a one-sided inverse is two-sided here
        um[u] = 1;
        break;
      }
  return um;
}

std::vector<size_t> idempotent_indices(const Monoid& M) {
  std::vector<size_t> out;
  for (size_t x = 0; x < M.size(); ++x)
    if (M.mul(x, x) == x) out.push_back(x);
  return out;
}

IndexPeriod index_period(const Monoid& M, size_t x) {
  std::unordered_map<size_t, size_t> seen;  // element -> exponent >= 1
  std::vector<size_t> powers;               // powers[j] = x^(j+1)
  size_t p = x;
  for (size_t e = 1;; ++e) {
    auto it = seen.find(p);
    if (it != seen.end()) {
      IndexPeriod out;
      out.index = it->second;
      out.period = e - it->second;
      const size_t k = ((out.index + out.period - 1) / out.period) * out.period;
      out.idempotent = powers[k - 1];
      return out;
    }
    seen.emplace(p, e);
    powers.push_back(p);
    p = M.mul(p, x);
  }
}

// ---------------------------------------------------------------------------
// maximal subgroups and conjugacy
// ---------------------------------------------------------------------------

TableMonoid group_of(const Monoid& M, const CellStructure& cs, size_t e) {
  if (e >= M.size() || M.mul(e, e) != e)
    throw std::invalid_argument("group_of: not an idempotent");
  std::vector<size_t> els;
  for (size_t x = 0; x < M.size(); ++x)
    if (cs.h_of[x] == cs.h_of[e]) els.push_back(x);
  const size_t k = els.size();
  std::vector<uint32_t> t(k * k);
  std::vector<std::string> labels(k);
  for (size_t i = 0; i < k; ++i) {
    labels[i] = M.label(els[i]);
    for (size_t j = 0; j < k; ++j) {
      const size_t p = M.mul(els[i], els[j]);
      const auto it = std::lower_bound(els.begin(), els.end(), p);
      if (it == els.end() || *it != p)
        throw std::logic_error("group_of: H-class of an idempotent not closed");
      t[i * k + j] = static_cast<uint32_t>(it - els.begin());
    }
  }
  const size_t unit =
      static_cast<size_t>(std::lower_bound(els.begin(), els.end(), e) -
                          els.begin());
  return TableMonoid(k, unit, std::move(t), std::move(labels));
}

std::vector<std::vector<size_t>> conjugacy_classes(const TableMonoid& G) {
  const size_t m = G.size();
  std::vector<size_t> inv(m, m);
  for (size_t g = 0; g < m; ++g)
    for (size_t h = 0; h < m; ++h)
      if (G.mul(g, h) == G.unit() && G.mul(h, g) == G.unit()) {
        inv[g] = h;
        break;
      }
  for (size_t g = 0; g < m; ++g)
    if (inv[g] == m)
      throw std::invalid_argument("conjugacy_classes: not a group");
  UnionFind uf(m);
  for (size_t x = 0; x < m; ++x)
    for (size_t g = 0; g < m; ++g)
      uf.unite(static_cast<uint32_t>(x),
               static_cast<uint32_t>(G.mul(G.mul(g, x), inv[g])));
  std::vector<std::vector<size_t>> classes;
  std::vector<long> of_root(m, -1);
  for (size_t x = 0; x < m; ++x) {
    const uint32_t r = uf.find(static_cast<uint32_t>(x));
    if (of_root[r] < 0) {
      of_root[r] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<size_t>(of_root[r])].push_back(x);
  }
  return classes;  // ordered by smallest member; members ascending
}

size_t element_order(const TableMonoid& G, size_t g) {
  size_t e = g, k = 1;
  while (e != G.unit()) {
    e = G.mul(e, g);
    ++k;
    if (k > G.size())
      throw std::invalid_argument("element_order: not a group element");
  }
  return k;
}

size_t conjugacy_class_total(const Monoid& M, const CellStructure& cs) {
  size_t total = 0;
  for (size_t c = 0; c < cs.cells.size(); ++c)
    if (cs.cells[c].has_idempotent)
      total += conjugacy_classes(group_of(M, cs, cs.cells[c].idempotent)).size();
  return total;
}

bool trivial_faithful_possible(const Monoid& M, const CellStructure& cs) {
  (void)M;
  size_t idem_cells = 0;
  for (const auto& cell : cs.cells)
    if (cell.has_idempotent) {
      ++idem_cells;
      if (cell.h_size != 1) return false;
    }
  return idem_cells <= 2;
}

// ---------------------------------------------------------------------------
// truncations
// ---------------------------------------------------------------------------

size_t TruncationMonoid::size() const {
  return kept_.size() + (fresh_unit_ ? 1 : 0) + (has_zero_ ? 1 : 0);
}

size_t TruncationMonoid::unit() const {
  return fresh_unit_ ? kept_.size()
                     : static_cast<size_t>(to_new_[base_->unit()]);
}

size_t TruncationMonoid::zero() const {
  if (!has_zero_) throw std::logic_error("truncation has no zero");
  return kept_.size() + (fresh_unit_ ? 1 : 0);
}

size_t TruncationMonoid::mul(size_t a, size_t b) const {
  const size_t k = kept_.size();
  if (fresh_unit_) {
    if (a == k) return b;
    if (b == k) return a;
  }
  if (has_zero_) {
    const size_t z = k + (fresh_unit_ ? 1 : 0);
    if (a == z || b == z) return z;
  }
  const size_t p = base_->mul(kept_[a], kept_[b]);
  const long q = to_new_[p];
  if (q >= 0) return static_cast<size_t>(q);
  if (!has_zero_)
    throw std::logic_error("truncation: product left the kept ideal");
  return k + (fresh_unit_ ? 1 : 0);
}

std::string TruncationMonoid::label(size_t a) const {
  const size_t k = kept_.size();
  if (a < k) return base_->label(kept_[a]);
  if (fresh_unit_ && a == k) return "1'";
  return "0";
}

TruncationMonoid truncate(std::shared_ptr<const Monoid> base,
                          const CellStructure& cells,
                          std::optional<size_t> low,
                          std::optional<size_t> high) {
  if (!base) throw std::invalid_argument("truncate: missing monoid");
  const size_t nj = cells.cells.size();
  if (low && *low >= nj) throw std::invalid_argument("truncate: no such low cell");
  if (high && *high >= nj)
    throw std::invalid_argument("truncate: no such high cell");
  if (low && *low == cells.units_cell)
    throw std::invalid_argument(
        "truncate: the low cell contains the unit; omit low instead");
  if (low && high && !cells.jreach[*low][*high])
    throw std::invalid_argument(
        "truncate: the high cell must lie in the ideal of the low cell");
  TruncationMonoid T;
  T.base_ = std::move(base);
  T.fresh_unit_ = low.has_value();
  T.has_zero_ = high.has_value();
  T.to_new_.assign(T.base_->size(), -1);
  for (size_t c = 0; c < nj; ++c) {
    const bool in_ideal = !low || cells.jreach[*low][c];
    const bool crushed = high && cells.jreach[*high][c] && c != *high;
    if (!in_ideal || crushed) continue;
    for (size_t x : cells.cells[c].elements) T.kept_.push_back(x);
  }
  std::sort(T.kept_.begin(), T.kept_.end());
  for (size_t i = 0; i < T.kept_.size(); ++i)
    T.to_new_[T.kept_[i]] = static_cast<long>(i);
  return T;
}

// ---------------------------------------------------------------------------
// roundedness
// ---------------------------------------------------------------------------

Roundedness roundedness(const Monoid& M) {
  const size_t m = M.size();
  const auto um = unit_mask(M);
  std::vector<uint32_t> nonunits;
  std::vector<long> pos(m, -1);
  for (size_t x = 0; x < m; ++x)
    if (!um[x]) {
      pos[x] = static_cast<long>(nonunits.size());
      nonunits.push_back(static_cast<uint32_t>(x));
    }
  const size_t k = nonunits.size();
  Roundedness out;
  if (k == 0) {  // a group: all three conditions hold vacuously
    out.left = out.right = out.null_rounded = out.well = true;
    return out;
  }
  UnionFind lf(k), rf(k);
  std::vector<char> is_product(m, 0);
  for (size_t ai = 0; ai < k; ++ai) {
    for (size_t bi = 0; bi < k; ++bi) {
      const size_t a = nonunits[ai], b = nonunits[bi];
      const size_t ba = M.mul(b, a);  // stays a non-unit: ideals absorb
      const size_t ab = M.mul(a, b);
      if (pos[ba] < 0 || pos[ab] < 0)
        throw std::logic_error("roundedness: product of non-units is a unit");
      lf.unite(static_cast<uint32_t>(pos[ba]), static_cast<uint32_t>(ai));
      rf.unite(static_cast<uint32_t>(pos[ab]), static_cast<uint32_t>(ai));
      is_product[ab] = 1;
    }
  }
  for (size_t i = 0; i < k; ++i) {
    if (lf.find(static_cast<uint32_t>(i)) == i) ++out.left_classes;
    if (rf.find(static_cast<uint32_t>(i)) == i) ++out.right_classes;
  }
  out.left = out.left_classes <= 1;
  out.right = out.right_classes <= 1;
  out.null_rounded = true;
  for (size_t i = 0; i < k; ++i)
    if (!is_product[nonunits[i]]) {
      out.null_rounded = false;
      break;
    }
  out.well = out.left && out.right && out.null_rounded;
  return out;
}

// ---------------------------------------------------------------------------
// derivation spaces
// ---------------------------------------------------------------------------

namespace {

template <class F>
size_t derivation_nullity(const Monoid& M, F field,
                          const std::vector<char>& xv,
                          const std::vector<char>& yv) {
  const size_t m = M.size();
  RowReducer<F> red(field, m);
  std::vector<typename F::Elem> row(m, field.zero());
  const auto one = field.one();
  for (size_t s = 0; s < m && !red.saturated(); ++s) {
    for (size_t t = 0; t < m && !red.saturated(); ++t) {
      std::fill(row.begin(), row.end(), field.zero());
      const size_t st = M.mul(s, t);
      row[st] = field.add(row[st], one);
      if (xv[s]) row[t] = field.sub(row[t], one);
      if (yv[t]) row[s] = field.sub(row[s], one);
      red.add_row(row);
    }
  }
  return m - red.rank();
}

std::vector<char> onedim_values(const Monoid& M, OneDimRep r,
                                const std::vector<char>& um) {
  if (r == OneDimRep::UnitsIndicator) return um;
  return std::vector<char>(M.size(), 1);
}

}  // namespace

size_t derivation_dim(const Monoid& M, const FieldSpec& K, OneDimRep X,
                      OneDimRep Y) {
  validate_field(K);
  const auto um = unit_mask(M);
  const auto xv = onedim_values(M, X, um);
  const auto yv = onedim_values(M, Y, um);
  const bool has_nonunit =
      std::find(um.begin(), um.end(), char(0)) != um.end();
  if (!K.is_rational())
    return derivation_nullity(M, PrimeField{K.ch}, xv, yv);
  // Over Q, first try one prime: rank can only drop modulo p, so a modular
  // nullity matching the a-priori lower bound is already exact.  The vector
  // X - Y is a nonzero solution over every field whenever X != Y.
  const size_t lower = (X != Y && has_nonunit) ? 1 : 0;
  const size_t np = derivation_nullity(M, PrimeField{1000003}, xv, yv);
  if (np == lower) return np;
  return derivation_nullity(M, RationalField{}, xv, yv);
}

size_t ext_dim(const Monoid& M, const FieldSpec& K, OneDimRep X, OneDimRep Y) {
  const size_t d = derivation_dim(M, K, X, Y);
  if (X == Y) return d;
  const auto um = unit_mask(M);
  const bool has_nonunit =
      std::find(um.begin(), um.end(), char(0)) != um.end();
  if (!has_nonunit) return d;
  if (d == 0) throw std::logic_error("ext_dim: missing inner derivation");
  return d - 1;
}

size_t additive_hom_dim(const Monoid& M, const FieldSpec& K) {
  return derivation_dim(M, K, OneDimRep::Trivial, OneDimRep::Trivial);
}

}  // namespace dmw
