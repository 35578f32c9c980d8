// test_diagram.cpp — unit tests for the core diagram type.  See LICENSE.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "dmw/diagram.hpp"

using namespace dmw;

TEST_CASE("construction validates partitions") {
  CHECK_THROWS_AS(Diagram(2, {{0, 1}, {2}}), std::invalid_argument);          // 3 missing
  CHECK_THROWS_AS(Diagram(2, {{0, 1}, {2, 3}, {3}}), std::invalid_argument);  // 3 twice
  CHECK_THROWS_AS(Diagram(2, {{0, 1}, {2, 4}}), std::invalid_argument);       // out of range
  CHECK_NOTHROW(Diagram(2, {{0, 1}, {2, 3}}));
  CHECK_NOTHROW(Diagram(0, {}));
}

TEST_CASE("serialization is canonical and parse accepts any block order") {
  Diagram a = Diagram::parse("3;0,1|3,4|2,5");
  Diagram b = Diagram::parse("3;2,5|0,1|3,4");
  CHECK(a == b);
  CHECK(a.to_string() == "3;0,1|2,5|3,4");  // blocks ordered by least element
  CHECK(Diagram::parse(a.to_string()) == a);
  CHECK(a == gen_u(3, 1));

  CHECK_THROWS_AS(Diagram::parse("3:0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("2;0,1|2"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("2;0,1|2,x"), std::invalid_argument);
  CHECK(Diagram::parse("0;") == Diagram::identity(0));
}

TEST_CASE("identity is neutral for composition") {
  for (int n : {1, 2, 3, 5}) {
    Diagram id = Diagram::identity(n);
    CHECK(compose(id, id) == id);
    for (int i = 1; i < n; ++i) {
      Diagram u = gen_u(n, i);
      CHECK(compose(id, u) == u);
      CHECK(compose(u, id) == u);
    }
  }
}

TEST_CASE("cup-cap relations hold with circle counting") {
  // u_i u_i = u_i with exactly one closed circle.
  for (int n : {2, 3, 4, 6}) {
    for (int i = 1; i < n; ++i) {
      int c = -1;
      CHECK(compose(gen_u(n, i), gen_u(n, i), &c) == gen_u(n, i));
      CHECK(c == 1);
    }
  }
  // u_i u_{i+-1} u_i = u_i without circles.
  for (int n : {3, 4, 5}) {
    for (int i = 1; i < n; ++i) {
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j >= n) continue;
        int c1 = -1, c2 = -1;
        Diagram t = compose(gen_u(n, i), gen_u(n, j), &c1);
        Diagram r = compose(t, gen_u(n, i), &c2);
        CHECK(r == gen_u(n, i));
        CHECK(c1 == 0);
        CHECK(c2 == 0);
      }
    }
  }
  // far-apart generators commute
  CHECK(compose(gen_u(4, 1), gen_u(4, 3)) == compose(gen_u(4, 3), gen_u(4, 1)));
  CHECK(compose(gen_u(5, 1), gen_u(5, 4)) == compose(gen_u(5, 4), gen_u(5, 1)));
}

TEST_CASE("symmetric group relations") {
  for (int n : {2, 3, 4}) {
    Diagram id = Diagram::identity(n);
    for (int i = 1; i < n; ++i) CHECK(compose(gen_s(n, i), gen_s(n, i)) == id);
  }
  // braid relation s1 s2 s1 = s2 s1 s2
  Diagram lhs = compose(compose(gen_s(3, 1), gen_s(3, 2)), gen_s(3, 1));
  Diagram rhs = compose(compose(gen_s(3, 2), gen_s(3, 1)), gen_s(3, 2));
  CHECK(lhs == rhs);
}

TEST_CASE("composition order: product a*b acts as b first") {
  // r_1 in degree 2 sends bottom 0 to top 1 (a shift up-right); l_1 = r_1*.
  Diagram r = gen_r(2, 1), l = gen_l(2, 1);
  // l r: first r (0 -> 1), then l (1 -> 0): net partial identity on {0}.
  Diagram lr = compose(l, r);
  CHECK(width(lr) == 1);
  CHECK(lr == Diagram(2, {{0, 2}, {1}, {3}}));
  // r l: first l, then r: partial identity on {1}.
  Diagram rl = compose(r, l);
  CHECK(rl == Diagram(2, {{1, 3}, {0}, {2}}));
}

TEST_CASE("star is an anti-involution") {
  std::vector<Diagram> gens;
  int n = 4;
  for (int i = 1; i < n; ++i) {
    gens.push_back(gen_u(n, i));
    gens.push_back(gen_s(n, i));
    gens.push_back(gen_r(n, i));
    gens.push_back(gen_b(n, i));
  }
  gens.push_back(gen_e(n, 1));
  for (const auto& a : gens) {
    CHECK(star(star(a)) == a);
    for (const auto& b : gens) CHECK(star(compose(a, b)) == compose(star(b), star(a)));
  }
  CHECK(star(gen_u(4, 2)) == gen_u(4, 2));  // u_i is self-dual
  CHECK(star(gen_r(3, 1)) == gen_l(3, 1));
}

TEST_CASE("width basics and submultiplicativity") {
  CHECK(width(Diagram::identity(5)) == 5);
  CHECK(width(gen_u(4, 2)) == 2);
  CHECK(width(gen_e(4, 1)) == 3);
  CHECK(width(gen_r(4, 2)) == 3);
  CHECK(width(gen_b(4, 2)) == 3);
  std::vector<Diagram> pool;
  int n = 4;
  for (int i = 1; i < n; ++i) {
    pool.push_back(gen_u(n, i));
    pool.push_back(gen_s(n, i));
    pool.push_back(gen_r(n, i));
  }
  pool.push_back(gen_e(n, 2));
  for (const auto& a : pool)
    for (const auto& b : pool)
      CHECK(width(compose(a, b)) <= std::min(width(a), width(b)));
}

TEST_CASE("planarity fixtures") {
  CHECK(is_planar(Diagram::identity(4)));
  CHECK(is_planar(gen_u(4, 1)));
  CHECK(is_planar(gen_u(4, 3)));
  CHECK(is_planar(gen_e(4, 2)));
  CHECK(is_planar(gen_r(4, 2)));
  CHECK(is_planar(gen_b(4, 2)));
  CHECK_FALSE(is_planar(gen_s(2, 1)));
  CHECK_FALSE(is_planar(gen_s(5, 3)));
  // the transposition written as blocks, and the order-reversing permutation
  CHECK_FALSE(is_planar(Diagram(2, {{0, 3}, {1, 2}})));
  CHECK_FALSE(is_planar(Diagram(3, {{0, 5}, {1, 4}, {2, 3}})));
  // one big block is planar, as are nested through-blocks
  CHECK(is_planar(Diagram(2, {{0, 1, 2, 3}})));
  CHECK(is_planar(Diagram(3, {{0, 2, 3, 5}, {1}, {4}})));
}

TEST_CASE("associativity over a mixed generator pool (exhaustive)") {
  int n = 3;
  std::vector<Diagram> pool = {Diagram::identity(n)};
  for (int i = 1; i < n; ++i) {
    pool.push_back(gen_u(n, i));
    pool.push_back(gen_s(n, i));
    pool.push_back(gen_r(n, i));
    pool.push_back(gen_l(n, i));
    pool.push_back(gen_b(n, i));
  }
  pool.push_back(gen_e(n, 1));
  pool.push_back(gen_e(n, 3));
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("factorize round-trips and splits planar diagrams with trivial sigma") {
  std::vector<Diagram> pool = {Diagram::identity(4), gen_u(4, 2), gen_e(4, 1),
                               gen_r(4, 3), gen_b(4, 1), gen_s(4, 2)};
  // a few products to get less trivial shapes
  pool.push_back(compose(gen_u(4, 1), gen_u(4, 2)));
  pool.push_back(compose(gen_s(4, 1), gen_u(4, 3)));
  pool.push_back(compose(gen_b(4, 2), gen_e(4, 4)));
  for (const auto& a : pool) {
    Factorization f = factorize(a);
    CHECK(f.k == width(a));
    CHECK(reassemble(f) == a);
    if (is_planar(a)) {
      for (size_t t = 0; t < f.sigma.size(); ++t)
        CHECK(f.sigma[t] == static_cast<int>(t));
    }
  }
  // a crossing has a non-identity sigma
  Factorization fs = factorize(gen_s(3, 1));
  CHECK(fs.k == 3);
  CHECK(fs.sigma == std::vector<int>{1, 0, 2});
}

TEST_CASE("hashing separates distinct diagrams in a small pool") {
  std::unordered_set<Diagram> set;
  for (int i = 1; i < 5; ++i) {
    set.insert(gen_u(5, i));
    set.insert(gen_s(5, i));
    set.insert(gen_r(5, i));
  }
  set.insert(Diagram::identity(5));
  CHECK(set.size() == 13);
  CHECK(set.count(gen_u(5, 2)) == 1);
  CHECK(set.count(gen_e(5, 1)) == 0);
}
