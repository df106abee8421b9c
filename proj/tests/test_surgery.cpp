#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "wsep/harness.hpp"
#include "wsep/surgery.hpp"

using namespace wsep;

namespace {

Mask s(const char* t) { return parse_shorthand(t, 9); }

Collection b_paper() {
  std::vector<Mask> v;
  for (auto x : {"-", "1", "4", "12", "14", "23", "24", "34", "123", "234", "1234"}) v.push_back(s(x));
  return Collection(4, v);
}

// Monotone paths along the two boundaries: p_0 p_1 ... p_n and p'_n p'_{n-1} ... p'_0.
LegalPath leftmost(int n) {
  std::vector<Mask> v;
  for (int q = 0; q <= n; ++q) v.push_back(interval(1, q));
  return make_path(n, v);
}

LegalPath rightmost(int n) {
  std::vector<Mask> v;
  for (int q = 0; q <= n; ++q) v.push_back(interval(n - q + 1, n));
  return make_path(n, v);
}

}  // namespace

TEST_CASE("paths from vertex walks") {
  LegalPath p = make_path(3, {0, s("1"), s("12"), s("2"), s("23"), s("123")});
  CHECK(p.colors == std::vector<int>{1, 2, 1, 3, 1});
  CHECK(p.forward == std::vector<bool>{true, true, false, true, true});
  CHECK(p.vee() == std::vector<Mask>{s("2")});
  CHECK(p.wedge() == std::vector<Mask>{s("12")});
  CHECK_THROWS_AS(make_path(3, {0, s("12")}), Error);
}

TEST_CASE("contraction of the figure tiling") {
  Contraction c = contract(from_spectrum(b_paper()));
  CHECK(c.tiling == standard_tiling(3));
  CHECK(c.path.critical() == std::vector<Mask>{0, s("1"), s("23"), s("123")});
  CHECK(is_legal(c.tiling, c.path));
  CHECK(expand(c.tiling, c.path) == from_spectrum(b_paper()));
  LegalPath again = legal_path_from_separator(c.tiling, separator(b_paper()));
  CHECK(again == c.path);
}

TEST_CASE("contraction of pure tilings") {
  for (int n = 2; n <= 6; ++n) {
    Contraction c = contract(standard_tiling(n));
    CHECK(c.tiling == standard_tiling(n - 1));
    CHECK(c.path == rightmost(n - 1));
    CHECK(expand(standard_tiling(n - 1), rightmost(n - 1)) == standard_tiling(n));
    GTiling left = expand(standard_tiling(n - 1), leftmost(n - 1));
    CHECK(validate(left).empty());
    CHECK(left.black_count() == 0);
    SeparatorChain suffix, prefix;
    for (int h = 0; h < n; ++h) {
      suffix.push_back(interval(n - h, n - 1));
      prefix.push_back(interval(1, h));
    }
    CHECK(legal_path_from_separator(standard_tiling(n - 1), suffix) == rightmost(n - 1));
    CHECK(legal_path_from_separator(standard_tiling(n - 1), prefix) == leftmost(n - 1));
  }
  Contraction c = contract(standard_tiling(2));
  CHECK(c.tiling.size() == 0);
  CHECK(c.path.vertices == std::vector<Mask>{0, s("1")});
}

TEST_CASE("illegal paths") {
  GTiling t = from_spectrum(b_paper());
  // through the terminal vertex {2}
  LegalPath via_terminal = make_path(4, {0, s("2"), s("23"), s("234"), s("1234")});
  CHECK_FALSE(is_legal(t, via_terminal));
  // forward 2 then backward 3 breaks the colour drop rule
  GTiling three = standard_tiling(3);
  LegalPath bad = make_path(3, {0, s("3"), s("23"), s("2"), s("12"), s("123")});
  CHECK_FALSE(is_legal(three, bad));
  CHECK_THROWS_AS(expand(three, bad), Error);
  SeparatorChain unordered{0, s("2"), s("13"), s("123")};
  CHECK_THROWS_AS(legal_path_from_separator(three, unordered), Error);
}

TEST_CASE("one backward edge makes one black tile") {
  GTiling three = standard_tiling(3);
  for (const LegalPath& p : legal_paths(three)) {
    std::size_t back = std::count(p.forward.begin(), p.forward.end(), false);
    CHECK(expand(three, p).black_count() == back);
  }
}

TEST_CASE("H_h levels") {
  for (int n = 1; n <= 5; ++n) {
    auto lv = h_forests(standard_tiling(n));
    REQUIRE(static_cast<int>(lv.size()) == n);
    for (const auto& l : lv) {
      CHECK(l.components.size() == 1);
      CHECK(l.problems.empty());
    }
  }
  auto lv = h_forests(from_spectrum(b_paper()));
  for (const auto& l : lv) CHECK(l.problems.empty());
  bool star2 = false, star124 = false;
  for (const auto& l : lv)
    for (const auto& c : l.components)
      if (!c.principal) {
        star2 = star2 || c.center == s("2");
        star124 = star124 || c.center == s("124");
      }
  CHECK(star2);
  CHECK(star124);
}

TEST_CASE("legal paths match a brute-force walk, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const GTiling& t : enumerate_tilings(n)) {
      std::set<std::vector<Mask>> lib;
      std::map<std::vector<Mask>, int> by_critical;
      LPGraph lp = lp_graph(t);
      for (const LegalPath& p : legal_paths(t)) {
        lib.insert(p.vertices);
        ++by_critical[p.critical()];
        for (std::size_t q = 0; q < p.colors.size(); ++q) {
          Mask a = p.vertices[q], b = p.vertices[q + 1];
          REQUIRE(lp.edges.count(Edge{std::min(a, b), p.colors[q]}));
        }
      }
      std::set<std::vector<Mask>> brute;
      for (const auto& w : oracle::local_legal_walks(t))
        if (is_legal(t, make_path(n, w))) brute.insert(w);
      REQUIRE(lib == brute);
      REQUIRE(count_legal_paths(t) == lib.size());
      for (auto& [crit, k] : by_critical) REQUIRE(k == 1);
      if (t.black_count() == 0) {
        REQUIRE(lib.count(rightmost(n).vertices));
        REQUIRE(lib.count(leftmost(n).vertices));
      }
    }
}

TEST_CASE("walks obeying the local rules are legal") {
  // The one-critical-vertex-per-level rule never rejects a walk the local rules allow.
  for (int n = 1; n <= 5; ++n)
    for (const GTiling& t : enumerate_tilings(n))
      for (const auto& w : oracle::local_legal_walks(t)) REQUIRE(is_legal(t, make_path(n, w)));
}

TEST_CASE("contract and expand are mutually inverse, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::set<GTiling> lower;
    for (const GTiling& t : enumerate_tilings(n - 1)) lower.insert(t);
    std::set<GTiling> produced;
    for (const GTiling& tp : lower)
      for (const LegalPath& p : legal_paths(tp)) {
        GTiling t = expand(tp, p);
        REQUIRE(validate(t).empty());
        Contraction c = contract(t);
        REQUIRE(c.tiling == tp);
        REQUIRE(c.path == p);
        Collection cp = project(spectrum(t)).cprime;
        REQUIRE(cp == spectrum(tp));
        REQUIRE(produced.insert(t).second);
      }
    for (const GTiling& t : enumerate_tilings(n)) {
      Contraction c = contract(t);
      REQUIRE(lower.count(c.tiling));
      REQUIRE(expand(c.tiling, c.path) == t);
    }
    CHECK(produced.size() == enumerate_tilings(n).size());
  }
}

TEST_CASE("tilings from ws collections, n <= 5") {
  for (int n = 1; n <= 6; ++n) CHECK(tiling_from_ws(standard_intervals(n)) == standard_tiling(n));
  CHECK(tiling_from_ws(b_paper()) == from_spectrum(b_paper()));
  CHECK_THROWS_AS(tiling_from_ws(Collection(4, {0, s("13"), s("24")})), Error);
  for (int n = 1; n <= 5; ++n)
    for (const Collection& c : oracle_largest_ws(n)) {
      GTiling t = tiling_from_ws(c);
      REQUIRE(validate(t).empty());
      REQUIRE(spectrum(t) == c);
    }
}

TEST_CASE("legal path counts are frozen") {
  // sum over tilings at n-1 equals the number of tilings at n
  std::vector<std::uint64_t> want{1, 1, 2, 10, 124, 3694};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t sum = 0;
    for (const GTiling& t : enumerate_tilings(n)) sum += count_legal_paths(t);
    CHECK(sum == want[n]);
  }
  CHECK(count_legal_paths(standard_tiling(3)) == 5);
}
