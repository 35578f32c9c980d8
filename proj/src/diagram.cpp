// diagram.cpp — composition, star, planarity, factorisation.  See LICENSE.

#include "dmw/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dmw {

namespace {

// Minimal union-find with path halving.
struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

void Diagram::canonicalise_from_raw(std::vector<int>& raw_ids) {
  // Relabel block ids by first occurrence; points are scanned in order, so
  // canonical ids are ordered by least element.
  const int m = static_cast<int>(raw_ids.size());
  std::vector<int> remap(static_cast<size_t>(m), -1);
  block_of_.assign(static_cast<size_t>(m), -1);
  int next = 0;
  for (int p = 0; p < m; ++p) {
    int r = raw_ids[static_cast<size_t>(p)];
    if (remap[static_cast<size_t>(r)] < 0) remap[static_cast<size_t>(r)] = next++;
    block_of_[static_cast<size_t>(p)] = static_cast<int16_t>(remap[static_cast<size_t>(r)]);
  }
  num_blocks_ = next;
}

Diagram::Diagram(int n, const std::vector<std::vector<int>>& blocks) : n_(n) {
  if (n < 0) throw std::invalid_argument("Diagram: negative degree");
  const int m = 2 * n;
  std::vector<int> raw(static_cast<size_t>(m), -1);
  int id = 0;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("Diagram: empty block");
    for (int p : blk) {
      if (p < 0 || p >= m) throw std::invalid_argument("Diagram: point out of range");
      if (raw[static_cast<size_t>(p)] != -1)
        throw std::invalid_argument("Diagram: point listed twice");
      raw[static_cast<size_t>(p)] = id;
    }
    ++id;
  }
  for (int p = 0; p < m; ++p)
    if (raw[static_cast<size_t>(p)] == -1)
      throw std::invalid_argument("Diagram: point missing from partition");
  canonicalise_from_raw(raw);
}

Diagram Diagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return Diagram(n, blocks);
}

std::vector<std::vector<int>> Diagram::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(num_blocks_));
  for (int p = 0; p < 2 * n_; ++p)
    out[static_cast<size_t>(block_of_[static_cast<size_t>(p)])].push_back(p);
  return out;  // ids ordered by least element, points ascending by scan order
}

size_t Diagram::hash() const {
  // FNV-1a over the canonical id vector.
  size_t h = 1469598103934665603ull;
  h ^= static_cast<size_t>(n_);
  h *= 1099511628211ull;
  for (int16_t v : block_of_) {
    h ^= static_cast<size_t>(static_cast<uint16_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << n_ << ';';
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) os << '|';
    for (size_t i = 0; i < bs[b].size(); ++i) {
      if (i) os << ',';
      os << bs[b][i];
    }
  }
  return os.str();
}

Diagram Diagram::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("Diagram::parse: missing ';'");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, semi), &used);
    if (used != semi) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("Diagram::parse: bad degree");
  }
  std::vector<std::vector<int>> blocks;
  std::string body = text.substr(semi + 1);
  if (!body.empty()) {
    std::istringstream bs(body);
    std::string blk;
    while (std::getline(bs, blk, '|')) {
      std::vector<int> pts;
      std::istringstream ps(blk);
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        try {
          size_t used = 0;
          int p = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument("");
          pts.push_back(p);
        } catch (...) {
          throw std::invalid_argument("Diagram::parse: bad point '" + tok + "'");
        }
      }
      blocks.push_back(std::move(pts));
    }
  }
  return Diagram(n, blocks);  // constructor validates the partition
}

Diagram compose(const Diagram& a, const Diagram& b, int* circles) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("compose: degree mismatch");
  const int n = a.n_;
  // Slots: 0..n-1 bottom (of b), n..2n-1 middle, 2n..3n-1 top (of a).
  UnionFind uf(3 * n);
  // b occupies bottom + middle: its point p maps to slot p.
  std::vector<int> first_b(static_cast<size_t>(b.num_blocks_), -1);
  for (int p = 0; p < 2 * n; ++p) {
    int blk = b.block_of_[static_cast<size_t>(p)];
    if (first_b[static_cast<size_t>(blk)] < 0) first_b[static_cast<size_t>(blk)] = p;
    else uf.unite(first_b[static_cast<size_t>(blk)], p);
  }
  // a occupies middle + top: its point p maps to slot p + n.
  std::vector<int> first_a(static_cast<size_t>(a.num_blocks_), -1);
  for (int p = 0; p < 2 * n; ++p) {
    int blk = a.block_of_[static_cast<size_t>(p)];
    if (first_a[static_cast<size_t>(blk)] < 0) first_a[static_cast<size_t>(blk)] = p + n;
    else uf.unite(first_a[static_cast<size_t>(blk)], p + n);
  }
  // Collect result blocks on the outer boundary and count middle-only
  // components.
  std::vector<int> raw(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    raw[static_cast<size_t>(i)] = uf.find(i);
    raw[static_cast<size_t>(n + i)] = uf.find(2 * n + i);
  }
  if (circles) {
    std::vector<char> touches_boundary(static_cast<size_t>(3 * n), 0);
    for (int i = 0; i < n; ++i) {
      touches_boundary[static_cast<size_t>(uf.find(i))] = 1;
      touches_boundary[static_cast<size_t>(uf.find(2 * n + i))] = 1;
    }
    int c = 0;
    for (int i = n; i < 2 * n; ++i)
      if (uf.find(i) == i && !touches_boundary[static_cast<size_t>(i)]) ++c;
    *circles = c;
  }
  // Compress raw root labels to block ids, then canonicalise.
  Diagram out;
  out.n_ = n;
  std::vector<int> compress(static_cast<size_t>(3 * n), -1);
  int next = 0;
  for (auto& r : raw) {
    if (compress[static_cast<size_t>(r)] < 0) compress[static_cast<size_t>(r)] = next++;
    r = compress[static_cast<size_t>(r)];
  }
  out.canonicalise_from_raw(raw);
  return out;
}

Diagram star(const Diagram& a) {
  const int n = a.n_;
  std::vector<int> raw(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    raw[static_cast<size_t>(i)] = a.block_of_[static_cast<size_t>(n + i)];
    raw[static_cast<size_t>(n + i)] = a.block_of_[static_cast<size_t>(i)];
  }
  Diagram out;
  out.n_ = n;
  out.canonicalise_from_raw(raw);
  return out;
}

int width(const Diagram& a) {
  const int n = a.n();
  std::vector<char> has_bottom(static_cast<size_t>(a.num_blocks()), 0);
  std::vector<char> has_top(static_cast<size_t>(a.num_blocks()), 0);
  for (int p = 0; p < n; ++p) has_bottom[static_cast<size_t>(a.block_of(p))] = 1;
  for (int p = n; p < 2 * n; ++p) has_top[static_cast<size_t>(a.block_of(p))] = 1;
  int w = 0;
  for (int b = 0; b < a.num_blocks(); ++b)
    if (has_bottom[static_cast<size_t>(b)] && has_top[static_cast<size_t>(b)]) ++w;
  return w;
}

bool is_planar(const Diagram& a) {
  // Walk the boundary bottom left-to-right then top right-to-left and check
  // that blocks nest like balanced brackets: when revisiting a block it must
  // be on top of the stack, and it is popped at its last visit.
  const int n = a.n();
  const int m = 2 * n;
  std::vector<int> remaining(static_cast<size_t>(a.num_blocks()), 0);
  for (int p = 0; p < m; ++p) ++remaining[static_cast<size_t>(a.block_of(p))];
  std::vector<int> stack;
  std::vector<char> on_stack(static_cast<size_t>(a.num_blocks()), 0);
  for (int pos = 0; pos < m; ++pos) {
    int point = pos < n ? pos : m - 1 - (pos - n);  // walk order
    int blk = a.block_of(point);
    if (on_stack[static_cast<size_t>(blk)]) {
      if (stack.back() != blk) return false;  // would cross an open block
    } else {
      stack.push_back(blk);
      on_stack[static_cast<size_t>(blk)] = 1;
    }
    if (--remaining[static_cast<size_t>(blk)] == 0) {
      if (stack.back() != blk) return false;
      stack.pop_back();
      on_stack[static_cast<size_t>(blk)] = 0;
    }
  }
  return true;
}

Factorization factorize(const Diagram& a) {
  const int n = a.n();
  Factorization f;
  f.n = n;
  struct Part {
    std::vector<int> bottom, top;  // top relabelled to 0..n-1
  };
  std::vector<Part> parts(static_cast<size_t>(a.num_blocks()));
  for (int p = 0; p < n; ++p) parts[static_cast<size_t>(a.block_of(p))].bottom.push_back(p);
  for (int p = n; p < 2 * n; ++p) parts[static_cast<size_t>(a.block_of(p))].top.push_back(p - n);
  // Bottom pattern: all nonempty bottom parts, sorted by least bottom
  // element.
  {
    struct BotPart { std::vector<int> pts; bool thr; };
    std::vector<BotPart> bps;
    for (auto& part : parts)
      if (!part.bottom.empty())
        bps.push_back({part.bottom, !part.top.empty()});
    std::sort(bps.begin(), bps.end(),
              [](const BotPart& x, const BotPart& y) { return x.pts[0] < y.pts[0]; });
    for (auto& bp : bps) {
      f.bottom_blocks.push_back(bp.pts);
      f.bottom_through.push_back(bp.thr ? 1 : 0);
    }
  }
  // Top pattern sorted by least top element.
  struct TopPart { std::vector<int> pts; bool thr; int block_id; };
  std::vector<TopPart> tps;
  for (size_t b = 0; b < parts.size(); ++b) {
    if (!parts[b].top.empty())
      tps.push_back({parts[b].top, !parts[b].bottom.empty(), static_cast<int>(b)});
  }
  std::sort(tps.begin(), tps.end(),
            [](const TopPart& x, const TopPart& y) { return x.pts[0] < y.pts[0]; });
  for (auto& tp : tps) {
    f.top_blocks.push_back(tp.pts);
    f.top_through.push_back(tp.thr ? 1 : 0);
  }
  // sigma: walk bottom through parts in order, find the index of their block
  // among top through parts in order.
  std::vector<int> top_thr_block_ids;
  for (auto& tp : tps)
    if (tp.thr) top_thr_block_ids.push_back(tp.block_id);
  int k = 0;
  for (size_t i = 0; i < f.bottom_blocks.size(); ++i) {
    if (!f.bottom_through[i]) continue;
    int blk = a.block_of(f.bottom_blocks[i][0]);
    auto it = std::find(top_thr_block_ids.begin(), top_thr_block_ids.end(), blk);
    f.sigma.push_back(static_cast<int>(it - top_thr_block_ids.begin()));
    ++k;
  }
  f.k = k;
  return f;
}

Diagram reassemble(const Factorization& f) {
  const int n = f.n;
  std::vector<std::vector<int>> blocks;
  // through bottom part t joins top through part sigma[t]
  std::vector<size_t> top_thr_index;  // positions of through parts in top list
  for (size_t i = 0; i < f.top_blocks.size(); ++i)
    if (f.top_through[i]) top_thr_index.push_back(i);
  if (static_cast<int>(top_thr_index.size()) != f.k ||
      static_cast<int>(f.sigma.size()) != f.k)
    throw std::invalid_argument("reassemble: inconsistent through data");
  int t = 0;
  for (size_t i = 0; i < f.bottom_blocks.size(); ++i) {
    if (f.bottom_through[i]) {
      std::vector<int> blk = f.bottom_blocks[i];
      for (int j : f.top_blocks[top_thr_index[static_cast<size_t>(f.sigma[static_cast<size_t>(t)])]])
        blk.push_back(n + j);
      blocks.push_back(std::move(blk));
      ++t;
    } else {
      blocks.push_back(f.bottom_blocks[i]);
    }
  }
  for (size_t i = 0; i < f.top_blocks.size(); ++i) {
    if (f.top_through[i]) continue;
    std::vector<int> blk;
    for (int j : f.top_blocks[i]) blk.push_back(n + j);
    blocks.push_back(std::move(blk));
  }
  return Diagram(n, blocks);
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

namespace {
void check_index(int n, int i, int lo, int hi, const char* who) {
  if (i < lo || i > hi || n < 1) {
    throw std::invalid_argument(std::string(who) + ": index out of range");
  }
}
}  // namespace

Diagram gen_u(int n, int i) {
  check_index(n, i, 1, n - 1, "gen_u");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1, i});
  blocks.push_back({n + i - 1, n + i});
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) blocks.push_back({j, n + j});
  return Diagram(n, blocks);
}

Diagram gen_s(int n, int i) {
  check_index(n, i, 1, n - 1, "gen_s");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1, n + i});
  blocks.push_back({i, n + i - 1});
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) blocks.push_back({j, n + j});
  return Diagram(n, blocks);
}

Diagram gen_e(int n, int i) {
  check_index(n, i, 1, n, "gen_e");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1});
  blocks.push_back({n + i - 1});
  for (int j = 0; j < n; ++j)
    if (j != i - 1) blocks.push_back({j, n + j});
  return Diagram(n, blocks);
}

Diagram gen_r(int n, int i) {
  check_index(n, i, 1, n - 1, "gen_r");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1, n + i});
  blocks.push_back({i});
  blocks.push_back({n + i - 1});
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) blocks.push_back({j, n + j});
  return Diagram(n, blocks);
}

Diagram gen_l(int n, int i) { return star(gen_r(n, i)); }

Diagram gen_b(int n, int i) {
  check_index(n, i, 1, n - 1, "gen_b");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1, i, n + i - 1, n + i});
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) blocks.push_back({j, n + j});
  return Diagram(n, blocks);
}

}  // namespace dmw
