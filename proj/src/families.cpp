// families.cpp — enumeration and structure of the diagram families.
// See LICENSE.

#include "dmw/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace dmw {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Walk order around the rectangle: positions 0..2n-1 traverse bottom
// left-to-right then top right-to-left; wid maps a position to a point label.
inline int wid(int n, int pos) { return pos < n ? pos : 3 * n - 1 - pos; }

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
  std::string s = lower(name);
  if (s == "tl") return Family::TL;
  if (s == "motzkin") return Family::Motzkin;
  if (s == "brauer") return Family::Brauer;
  if (s == "prook") return Family::PlanarRook;
  if (s == "rook") return Family::Rook;
  if (s == "rookbrauer") return Family::RookBrauer;
  if (s == "ppartition") return Family::PlanarPartition;
  if (s == "partition") return Family::Partition;
  if (s == "sym") return Family::Symmetric;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::TL: return "tl";
    case Family::Motzkin: return "motzkin";
    case Family::Brauer: return "brauer";
    case Family::PlanarRook: return "prook";
    case Family::Rook: return "rook";
    case Family::RookBrauer: return "rookbrauer";
    case Family::PlanarPartition: return "ppartition";
    case Family::Partition: return "partition";
    case Family::Symmetric: return "sym";
  }
  return "?";
}

Int family_cardinality(Family f, int n) {
  if (n < 0) throw std::invalid_argument("family_cardinality: negative degree");
  switch (f) {
    case Family::TL:
      return catalan(n);
    case Family::Motzkin: {
      // planar partial matchings of 2n points
      Int s(0);
      for (int k = 0; k <= n; ++k) s += binomial(2 * n, 2 * k) * catalan(k);
      return s;
    }
    case Family::Brauer:
      return double_factorial(2 * n - 1);
    case Family::PlanarRook:
      return binomial(2 * n, n);
    case Family::Rook: {
      Int s(0);
      for (int k = 0; k <= n; ++k) {
        Int b = binomial(n, k);
        s += factorial(k) * b * b;
      }
      return s;
    }
    case Family::RookBrauer: {
      Int s(0);
      for (int j = 0; j <= n; ++j)
        s += binomial(2 * n, 2 * j) * double_factorial(2 * j - 1);
      return s;
    }
    case Family::PlanarPartition:
      return catalan(2 * n);
    case Family::Partition:
      return bell(2 * n);
    case Family::Symmetric:
      return factorial(n);
  }
  throw std::logic_error("family_cardinality: unreachable");
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

// Non-crossing matchings / partial matchings of the point labels in `pts`,
// non-crossing with respect to the order of `pts` (the caller passes points
// in boundary-walk order).
void planar_matchings(std::vector<int> pts, bool partial,
                      std::vector<std::pair<int, int>>& pairs,
                      std::vector<int>& singles, const std::function<void()>& emit) {
  if (pts.empty()) {
    emit();
    return;
  }
  int p0 = pts.front();
  if (partial) {
    std::vector<int> rest(pts.begin() + 1, pts.end());
    singles.push_back(p0);
    planar_matchings(rest, partial, pairs, singles, emit);
    singles.pop_back();
  }
  for (size_t j = 1; j < pts.size(); ++j) {
    if (!partial && (j % 2) == 0) continue;
    std::vector<int> inside(pts.begin() + 1, pts.begin() + static_cast<long>(j));
    std::vector<int> outside(pts.begin() + static_cast<long>(j) + 1, pts.end());
    pairs.emplace_back(p0, pts[j]);
    planar_matchings(inside, partial, pairs, singles, [&]() {
      planar_matchings(outside, partial, pairs, singles, emit);
    });
    pairs.pop_back();
  }
}

// All matchings / partial matchings (crossings allowed).
void free_matchings(std::vector<int> pts, bool partial,
                    std::vector<std::pair<int, int>>& pairs,
                    std::vector<int>& singles, const std::function<void()>& emit) {
  if (pts.empty()) {
    emit();
    return;
  }
  int p0 = pts.front();
  std::vector<int> rest(pts.begin() + 1, pts.end());
  if (partial) {
    singles.push_back(p0);
    free_matchings(rest, partial, pairs, singles, emit);
    singles.pop_back();
  }
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> rem;
    rem.reserve(rest.size() - 1);
    for (size_t t = 0; t < rest.size(); ++t)
      if (t != j) rem.push_back(rest[t]);
    pairs.emplace_back(p0, rest[j]);
    free_matchings(rem, partial, pairs, singles, emit);
    pairs.pop_back();
  }
}

// Non-crossing set partitions of the ordered list `seg` (plus further pending
// segments); each block lives inside one segment gap of its parent.
void planar_partitions(std::vector<std::vector<int>>& pending,
                       std::vector<std::vector<int>>& blocks,
                       const std::function<void()>& emit) {
  if (pending.empty()) {
    emit();
    return;
  }
  std::vector<int> seg = std::move(pending.back());
  pending.pop_back();
  if (seg.empty()) {
    planar_partitions(pending, blocks, emit);
    pending.push_back(std::move(seg));
    return;
  }
  std::vector<int> block{seg[0]};
  std::function<void(size_t)> choose = [&](size_t from) {
    // close the block; everything after `from` is a sibling segment
    {
      pending.emplace_back(seg.begin() + static_cast<long>(from), seg.end());
      blocks.push_back(block);
      planar_partitions(pending, blocks, emit);
      blocks.pop_back();
      pending.pop_back();
    }
    // or extend the block with seg[j]; seg[from..j-1] becomes a nested gap
    for (size_t j = from; j < seg.size(); ++j) {
      pending.emplace_back(seg.begin() + static_cast<long>(from),
                           seg.begin() + static_cast<long>(j));
      block.push_back(seg[j]);
      choose(j + 1);
      block.pop_back();
      pending.pop_back();
    }
  };
  choose(1);
  pending.push_back(std::move(seg));
}

// Restricted growth strings = set partitions of 0..m-1.
void rgs_partitions(int m, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> label(static_cast<size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int maxl) {
    if (i == m) {
      emit(label);
      return;
    }
    for (int v = 0; v <= maxl + 1; ++v) {
      label[static_cast<size_t>(i)] = v;
      rec(i + 1, std::max(maxl, v));
    }
  };
  if (m == 0) {
    emit(label);
    return;
  }
  rec(0, -1);
}

}  // namespace

std::vector<Diagram> enumerate_family(Family f, int n, const EnumGuard& guard) {
  Int card = family_cardinality(f, n);
  if (card > guard.max_elements) {
    throw resource_error("enumerate_family: |" + std::string(family_name(f)) + "_" +
                         std::to_string(n) + "| = " + card.get_str() +
                         " exceeds the element guard " + std::to_string(guard.max_elements) +
                         " (raise max_elements to override)");
  }
  std::vector<Diagram> out;
  out.reserve(card.get_ui());  // card fits: it passed the guard above
  const int m = 2 * n;
  std::vector<int> walk_pts(static_cast<size_t>(m));
  for (int pos = 0; pos < m; ++pos) walk_pts[static_cast<size_t>(pos)] = wid(n, pos);

  auto emit_pairs = [&](const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<int>& singles) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pairs.size() + singles.size());
    for (auto& [a, b] : pairs) blocks.push_back({a, b});
    for (int s : singles) blocks.push_back({s});
    out.emplace_back(n, blocks);
  };

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> singles;
  switch (f) {
    case Family::TL:
      planar_matchings(walk_pts, false, pairs, singles,
                       [&]() { emit_pairs(pairs, singles); });
      break;
    case Family::Motzkin:
      planar_matchings(walk_pts, true, pairs, singles,
                       [&]() { emit_pairs(pairs, singles); });
      break;
    case Family::Brauer: {
      std::vector<int> ids(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) ids[static_cast<size_t>(i)] = i;
      free_matchings(ids, false, pairs, singles, [&]() { emit_pairs(pairs, singles); });
      break;
    }
    case Family::RookBrauer: {
      std::vector<int> ids(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) ids[static_cast<size_t>(i)] = i;
      free_matchings(ids, true, pairs, singles, [&]() { emit_pairs(pairs, singles); });
      break;
    }
    case Family::Rook: {
      // partial injections: bottom point matched to an unused top or dropped
      std::vector<int> match(static_cast<size_t>(n), -1);
      std::vector<char> used(static_cast<size_t>(n), 0);
      std::function<void(int)> rec = [&](int b) {
        if (b == n) {
          std::vector<std::vector<int>> blocks;
          std::vector<char> topused(static_cast<size_t>(n), 0);
          for (int i = 0; i < n; ++i) {
            if (match[static_cast<size_t>(i)] >= 0) {
              blocks.push_back({i, n + match[static_cast<size_t>(i)]});
              topused[static_cast<size_t>(match[static_cast<size_t>(i)])] = 1;
            } else {
              blocks.push_back({i});
            }
          }
          for (int t = 0; t < n; ++t)
            if (!topused[static_cast<size_t>(t)]) blocks.push_back({n + t});
          out.emplace_back(n, blocks);
          return;
        }
        match[static_cast<size_t>(b)] = -1;
        rec(b + 1);
        for (int t = 0; t < n; ++t) {
          if (used[static_cast<size_t>(t)]) continue;
          used[static_cast<size_t>(t)] = 1;
          match[static_cast<size_t>(b)] = t;
          rec(b + 1);
          match[static_cast<size_t>(b)] = -1;
          used[static_cast<size_t>(t)] = 0;
        }
      };
      rec(0);
      break;
    }
    case Family::PlanarRook: {
      // order-preserving partial injections: equal-size subsets paired in order
      for (int mask_b = 0; mask_b < (1 << n); ++mask_b) {
        for (int mask_t = 0; mask_t < (1 << n); ++mask_t) {
          if (__builtin_popcount(static_cast<unsigned>(mask_b)) !=
              __builtin_popcount(static_cast<unsigned>(mask_t)))
            continue;
          std::vector<int> bs, ts;
          for (int i = 0; i < n; ++i) {
            if (mask_b & (1 << i)) bs.push_back(i);
            if (mask_t & (1 << i)) ts.push_back(i);
          }
          std::vector<std::vector<int>> blocks;
          std::vector<char> inb(static_cast<size_t>(n), 0), intp(static_cast<size_t>(n), 0);
          for (size_t t = 0; t < bs.size(); ++t) {
            blocks.push_back({bs[t], n + ts[t]});
            inb[static_cast<size_t>(bs[t])] = 1;
            intp[static_cast<size_t>(ts[t])] = 1;
          }
          for (int i = 0; i < n; ++i) {
            if (!inb[static_cast<size_t>(i)]) blocks.push_back({i});
            if (!intp[static_cast<size_t>(i)]) blocks.push_back({n + i});
          }
          out.emplace_back(n, blocks);
        }
      }
      break;
    }
    case Family::PlanarPartition: {
      std::vector<std::vector<int>> pending{walk_pts};
      std::vector<std::vector<int>> blocks;
      planar_partitions(pending, blocks, [&]() { out.emplace_back(n, blocks); });
      break;
    }
    case Family::Partition:
      rgs_partitions(m, [&](const std::vector<int>& label) {
        int nb = m == 0 ? 0 : 1 + *std::max_element(label.begin(), label.end());
        std::vector<std::vector<int>> blocks(static_cast<size_t>(nb));
        for (int p = 0; p < m; ++p)
          blocks[static_cast<size_t>(label[static_cast<size_t>(p)])].push_back(p);
        out.emplace_back(n, blocks);
      });
      break;
    case Family::Symmetric: {
      std::vector<int> perm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
      do {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < n; ++i) blocks.push_back({i, n + perm[static_cast<size_t>(i)]});
        out.emplace_back(n, blocks);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }

  std::vector<std::pair<std::string, size_t>> keyed;
  keyed.reserve(out.size());
  for (size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].to_string(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Diagram> sorted;
  sorted.reserve(out.size());
  for (auto& [key, i] : keyed) sorted.push_back(std::move(out[i]));
  if (Int(static_cast<long>(sorted.size())) != card)
    throw std::logic_error("enumerate_family: count disagrees with the closed formula");
  for (size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first)
      throw std::logic_error("enumerate_family: duplicate element generated");
  return sorted;
}

std::vector<Diagram> family_generators(Family f, int n) {
  std::vector<Diagram> g;
  if (n <= 0) return g;
  auto add_range = [&](Diagram (*gen)(int, int), int lo, int hi) {
    for (int i = lo; i <= hi; ++i) g.push_back(gen(n, i));
  };
  switch (f) {
    case Family::TL:
      add_range(gen_u, 1, n - 1);
      break;
    case Family::Motzkin:
      add_range(gen_u, 1, n - 1);
      add_range(gen_r, 1, n - 1);
      add_range(gen_l, 1, n - 1);
      if (n == 1) g.push_back(gen_e(1, 1));
      break;
    case Family::Brauer:
      add_range(gen_s, 1, n - 1);
      add_range(gen_u, 1, n - 1);
      break;
    case Family::PlanarRook:
      add_range(gen_r, 1, n - 1);
      add_range(gen_l, 1, n - 1);
      if (n == 1) g.push_back(gen_e(1, 1));
      break;
    case Family::Rook:
      add_range(gen_s, 1, n - 1);
      g.push_back(gen_e(n, 1));
      break;
    case Family::RookBrauer:
      add_range(gen_s, 1, n - 1);
      add_range(gen_u, 1, n - 1);
      g.push_back(gen_e(n, 1));
      break;
    case Family::PlanarPartition:
      add_range(gen_e, 1, n);
      add_range(gen_b, 1, n - 1);
      break;
    case Family::Partition:
      add_range(gen_s, 1, n - 1);
      g.push_back(gen_e(n, 1));
      if (n >= 2) g.push_back(gen_b(n, 1));
      break;
    case Family::Symmetric:
      add_range(gen_s, 1, n - 1);
      break;
  }
  return g;
}

bool is_member(Family f, const Diagram& d) {
  const int n = d.n();
  auto blocks = d.blocks();
  auto max_block = [&]() {
    size_t m = 0;
    for (auto& b : blocks) m = std::max(m, b.size());
    return m;
  };
  auto pairs_through_only = [&]() {
    for (auto& b : blocks)
      if (b.size() == 2 && (b[1] < n || b[0] >= n)) return false;
    return true;
  };
  auto all_pairs = [&]() {
    for (auto& b : blocks)
      if (b.size() != 2) return false;
    return true;
  };
  switch (f) {
    case Family::TL:
      return all_pairs() && is_planar(d);
    case Family::Motzkin:
      return max_block() <= 2 && is_planar(d);
    case Family::Brauer:
      return all_pairs();
    case Family::PlanarRook:
      return max_block() <= 2 && pairs_through_only() && is_planar(d);
    case Family::Rook:
      return max_block() <= 2 && pairs_through_only();
    case Family::RookBrauer:
      return max_block() <= 2;
    case Family::PlanarPartition:
      return is_planar(d);
    case Family::Partition:
      return true;
    case Family::Symmetric:
      return all_pairs() && width(d) == n;
  }
  return false;
}

std::vector<int> family_apex_widths(Family f, int n) {
  std::vector<int> w;
  switch (f) {
    case Family::TL:
    case Family::Brauer:
      for (int k = n; k >= 0; k -= 2) w.push_back(k);
      break;
    case Family::Symmetric:
      w.push_back(n);
      break;
    default:
      for (int k = n; k >= 0; --k) w.push_back(k);
      break;
  }
  return w;
}

}  // namespace dmw
