/*
  This is test_rootsys.cpp, part of smallchar.

  Root system construction against classical data: root counts per family,
  explicit G2 and F4 root lists, length classes, strings, orbits, epsilon
  coordinates, and the JSON export shape.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "rootsys.hpp"

using namespace smallchar;

namespace {

RootSystem make(char f, int r) { return build_root_system(SimpleType(f, r)); }

Coeffs v(std::initializer_list<int> l) { return Coeffs(l); }

// Independent count of positive roots from the classical closed formulas,
// used as the oracle for the closure-generated sets.
int classical_positive_count(char f, int n) {
  switch (f) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("type validity") {
  CHECK_NOTHROW(SimpleType('A', 1));
  CHECK_NOTHROW(SimpleType('B', 2));
  CHECK_NOTHROW(SimpleType('D', 3));
  CHECK_NOTHROW(SimpleType('E', 6));
  CHECK_NOTHROW(SimpleType('F', 4));
  CHECK_NOTHROW(SimpleType('G', 2));
  CHECK_THROWS_AS(SimpleType('A', 0), error);
  CHECK_THROWS_AS(SimpleType('B', 1), error);
  CHECK_THROWS_AS(SimpleType('C', 1), error);
  CHECK_THROWS_AS(SimpleType('D', 2), error);
  CHECK_THROWS_AS(SimpleType('E', 5), error);
  CHECK_THROWS_AS(SimpleType('E', 9), error);
  CHECK_THROWS_AS(SimpleType('F', 3), error);
  CHECK_THROWS_AS(SimpleType('G', 3), error);
  CHECK_THROWS_AS(SimpleType('H', 4), error);
}

TEST_CASE("mixed-sign root vectors are rejected") {
  CHECK_NOTHROW(Root(v({1, 2, 0})));
  CHECK_NOTHROW(Root(v({0, -1, -1})));
  CHECK_NOTHROW(Root(v({0, 0, 0})));
  CHECK_THROWS_AS(Root(v({1, -1, 0})), error);
}

TEST_CASE("positive root counts match the classical formulas") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3},
           {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4},
           {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
    RootSystem rs = make(f, n);
    CAPTURE(rs.type.name());
    CHECK(rs.npos == classical_positive_count(f, n));
    CHECK(int(rs.roots.size()) == 2 * rs.npos);
  }
}

TEST_CASE("G2 root list and length classes") {
  RootSystem rs = make('G', 2);
  std::set<Coeffs> shortpos, longpos;
  for (int k = 0; k < rs.npos; ++k)
    (rs.islong[k] ? longpos : shortpos).insert(rs.roots[k].c);
  CHECK(shortpos == std::set<Coeffs>{v({1, 0}), v({1, 1}), v({2, 1})});
  CHECK(longpos == std::set<Coeffs>{v({0, 1}), v({3, 1}), v({3, 2})});
}

TEST_CASE("F4 short positive roots") {
  RootSystem rs = make('F', 4);
  std::set<Coeffs> shortpos;
  for (int k : short_positive(rs)) shortpos.insert(rs.roots[k].c);
  std::set<Coeffs> expect{
      v({0, 0, 1, 0}), v({0, 0, 0, 1}), v({0, 1, 1, 0}), v({0, 0, 1, 1}),
      v({1, 1, 1, 0}), v({0, 1, 2, 1}), v({0, 1, 1, 1}), v({1, 2, 3, 2}),
      v({1, 1, 1, 1}), v({1, 1, 2, 1}), v({1, 2, 2, 1}), v({1, 2, 3, 1})};
  CHECK(shortpos == expect);
  CHECK(long_positive(rs).size() == 12);
}

TEST_CASE("highest roots") {
  RootSystem f4 = make('F', 4);
  CHECK(f4.roots[highest_root(f4)].c == v({2, 3, 4, 2}));
  CHECK(f4.roots[highest_short_root(f4)].c == v({1, 2, 3, 2}));
  RootSystem g2 = make('G', 2);
  CHECK(g2.roots[highest_root(g2)].c == v({3, 2}));
  CHECK(g2.roots[highest_short_root(g2)].c == v({2, 1}));
  RootSystem b3 = make('B', 3);
  CHECK(b3.roots[highest_root(b3)].c == v({1, 2, 2}));
  CHECK(b3.roots[highest_short_root(b3)].c == v({1, 1, 1}));
  RootSystem c3 = make('C', 3);
  CHECK(c3.roots[highest_root(c3)].c == v({2, 2, 1}));
  CHECK(c3.roots[highest_short_root(c3)].c == v({1, 2, 1}));
  RootSystem a3 = make('A', 3);
  CHECK(a3.roots[highest_root(a3)].c == v({1, 1, 1}));
  CHECK(highest_short_root(a3) == highest_root(a3));
}

TEST_CASE("pairings against the embedded Cartan data") {
  RootSystem g2 = make('G', 2);
  CHECK(g2.pairing_simple(v({0, 1}), 0) == -3);
  CHECK(g2.pairing_simple(v({1, 0}), 1) == -1);
  CHECK(g2.pairing(v({0, 1}), v({1, 0})) == -3);
  RootSystem b3 = make('B', 3);
  CHECK(b3.pairing_simple(v({0, 1, 0}), 2) == -2);
  CHECK(b3.pairing_simple(v({0, 0, 1}), 1) == -1);
  RootSystem c3 = make('C', 3);
  CHECK(c3.pairing_simple(v({0, 0, 1}), 1) == -2);
  CHECK(c3.pairing_simple(v({0, 1, 0}), 2) == -1);
  CHECK(c3.pairing(v({0, 0, 1}), v({0, 1, 0})) == -2);
}

TEST_CASE("reflections") {
  RootSystem g2 = make('G', 2);
  CHECK(reflect(g2, Root(v({1, 0})), 1).c == v({1, 1}));
  CHECK(reflect(g2, Root(v({0, 1})), 0).c == v({3, 1}));
  RootSystem f4 = make('F', 4);
  CHECK(reflect(f4, Root(v({1, 1, 1, 0})), 3).c == v({1, 1, 1, 1}));
  CHECK(reflect(f4, Root(v({0, 1, 0, 0})), 2).c == v({0, 1, 2, 0}));
  CHECK(reflect_by(f4, Root(v({0, 0, 1, 0})), Root(v({0, 0, 1, 0}))).c ==
        v({0, 0, -1, 0}));
  CHECK_THROWS_AS(reflect(f4, Root(v({1, 0, 0, 0})), 4), error);
}

TEST_CASE("root strings") {
  RootSystem g2 = make('G', 2);
  auto [r0, q0] = root_string(g2, Root(v({0, 1})), Root(v({1, 0})));
  CHECK(r0 == 0);
  CHECK(q0 == 3);
  auto [r1, q1] = root_string(g2, Root(v({3, 1})), Root(v({1, 0})));
  CHECK(r1 == 3);
  CHECK(q1 == 0);
  RootSystem b2 = make('B', 2);
  auto [r2, q2] = root_string(b2, Root(v({1, 0})), Root(v({0, 1})));
  CHECK(r2 == 0);
  CHECK(q2 == 2);
  CHECK_THROWS_AS(root_string(b2, Root(v({1, 0})), Root(v({1, 0}))), error);
  CHECK_THROWS_AS(root_string(b2, Root(v({1, 0})), Root(v({-1, 0}))), error);
}

TEST_CASE("string closure property across small systems") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    RootSystem rs = make(f, n);
    CAPTURE(rs.type.name());
    for (int i = 0; i < int(rs.roots.size()); ++i)
      for (int j = 0; j < int(rs.roots.size()); ++j) {
        if (i == j || rs.negate(i) == j) continue;
        auto [r, q] = root_string(rs, rs.roots[i], rs.roots[j]);
        CHECK(r + q <= 3);
        if (r + q == 3) CHECK(f == 'G');
      }
  }
}

TEST_CASE("Weyl orbits") {
  RootSystem b3 = make('B', 3);
  int shrt = b3.index_of(v({1, 1, 1}));   // epsilon_1
  int lng = b3.index_of(v({1, 0, 0}));    // epsilon_1 - epsilon_2
  CHECK(weyl_orbit(b3, shrt).size() == 6);
  CHECK(weyl_orbit(b3, lng).size() == 12);
  RootSystem g2 = make('G', 2);
  CHECK(weyl_orbit(g2, g2.index_of(v({1, 0}))).size() == 6);
  CHECK(weyl_orbit(g2, g2.index_of(v({0, 1}))).size() == 6);
  RootSystem d4 = make('D', 4);
  CHECK(weyl_orbit(d4, 0).size() == 24);
  RootSystem f4 = make('F', 4);
  CHECK(weyl_orbit(f4, f4.index_of(v({0, 0, 1, 0}))).size() == 24);
  CHECK(weyl_orbit(f4, f4.index_of(v({1, 0, 0, 0}))).size() == 24);
}

TEST_CASE("orbit count is the number of length classes") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'B', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    RootSystem rs = make(f, n);
    std::set<std::vector<int>> orbits;
    for (int k = 0; k < int(rs.roots.size()); ++k)
      orbits.insert(weyl_orbit(rs, k));
    CHECK(orbits.size() == (rs.type.simply_laced() ? 1u : 2u));
    size_t total = 0;
    for (const auto& o : orbits) total += o.size();
    CHECK(total == rs.roots.size());
  }
}

TEST_CASE("support") {
  CHECK(support(Root(v({1, 0, 2, 0}))) == std::vector<int>{0, 2});
  CHECK(support(Root(v({0, 0}))).empty());
}

TEST_CASE("epsilon coordinates for B and C") {
  RootSystem b3 = make('B', 3);
  CHECK(to_epsilon(b3, v({1, 1, 1})) == std::vector<int>{1, 0, 0});
  CHECK(to_epsilon(b3, v({1, 0, 0})) == std::vector<int>{1, -1, 0});
  CHECK(to_epsilon(b3, v({1, 2, 2})) == std::vector<int>{1, 1, 0});
  RootSystem c3 = make('C', 3);
  CHECK(to_epsilon(c3, v({2, 2, 1})) == std::vector<int>{2, 0, 0});
  CHECK(to_epsilon(c3, v({1, 2, 1})) == std::vector<int>{1, 1, 0});
  CHECK(to_epsilon(c3, v({0, 0, 1})) == std::vector<int>{0, 0, 2});
  for (const RootSystem* rs : {&b3, &c3})
    for (const Root& g : rs->roots)
      CHECK(from_epsilon(*rs, to_epsilon(*rs, g.c)) == g.c);
  CHECK_THROWS_AS(to_epsilon(make('A', 2), v({1, 0})), error);
  CHECK_THROWS_AS(from_epsilon(c3, {0, 0, 1}), error);
}

TEST_CASE("coroots are integral and pair to 2 with their root") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{
           {'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}, {'A', 3}}) {
    RootSystem rs = make(f, n);
    for (const Root& g : rs.roots) {
      CHECK(rs.pairing(g.c, g.c) == 2);
      Coeffs cv = rs.coroot(g.c);
      // <gamma, gamma^vee> = sum_i cv_i <gamma, alpha_i^vee> = 2
      int s = 0;
      for (int i = 0; i < rs.n; ++i) s += cv[i] * rs.pairing_simple(g.c, i);
      CHECK(s == 2);
    }
  }
}

TEST_CASE("height-then-lex ordering of the stored roots") {
  RootSystem f4 = make('F', 4);
  for (int k = 0; k + 1 < f4.npos; ++k) {
    const Root& a = f4.roots[k];
    const Root& b = f4.roots[k + 1];
    bool ordered =
        a.height() < b.height() || (a.height() == b.height() && a.c < b.c);
    CHECK(ordered);
  }
  CHECK(f4.roots[0].c == v({0, 0, 0, 1}));
}

TEST_CASE("json export") {
  RootSystem f4 = make('F', 4);
  auto j = nlohmann::json::parse(root_system_json(f4));
  CHECK(j["type"] == "F4");
  CHECK(j["positive_roots"].size() == 24);
  CHECK(j["short"].size() == 12);
  CHECK(j["positive_roots"][0] == nlohmann::json::array({0, 0, 0, 1}));
  RootSystem a2 = make('A', 2);
  auto j2 = nlohmann::json::parse(root_system_json(a2));
  CHECK(j2["short"].empty());
  CHECK(j2["positive_roots"].size() == 3);
}
