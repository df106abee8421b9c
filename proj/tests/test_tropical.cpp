#include <doctest.h>

#include <random>

#include "wsep/harness.hpp"
#include "wsep/tropical.hpp"

using namespace wsep;

namespace {

Mask s(const char* t) { return parse_shorthand(t, 9); }

Collection b_paper() {
  std::vector<Mask> v;
  for (auto x : {"-", "1", "4", "12", "14", "23", "24", "34", "123", "234", "1234"}) v.push_back(s(x));
  return Collection(4, v);
}

// Values in [-5, 5]; modulo keeps the stream identical across standard libraries.
std::map<Mask, Value> random_values(const Collection& b, std::mt19937_64& rng) {
  std::map<Mask, Value> v;
  for (Mask x : b) v[x] = static_cast<Value>(rng() % 11) - 5;
  return v;
}

TPFunction modular(int n, const std::vector<Value>& c) {
  TPFunction f{n, std::vector<Value>(std::size_t{1} << n)};
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    for (int i : elements(x)) f.values[x] += c[i - 1];
  return f;
}

}  // namespace

TEST_CASE("p3 examples") {
  TPFunction zero{3, std::vector<Value>(8, 0)};
  CHECK(p3_holds(zero, 0, 1, 2, 3));
  TPFunction size{4, std::vector<Value>(16)};
  for (Mask x = 0; x < 16; ++x) size.values[x] = card(x);
  CHECK(satisfies_p3(size));
  CHECK_THROWS_AS(p3_holds(size, s("1"), 1, 2, 3), Error);
  TPFunction f = zero;
  f.values[s("12")] = f.values[s("23")] = 1;
  f.values[s("13")] = 1;
  CHECK(p3_holds(f, 0, 1, 2, 3));
  f.values[s("13")] = 0;
  CHECK_FALSE(p3_holds(f, 0, 1, 2, 3));
}

TEST_CASE("extension from intervals") {
  std::map<Mask, Value> v;
  for (Mask x : standard_intervals(3)) v[x] = 0;
  CHECK(extend_from_intervals(3, v) == TPFunction{3, std::vector<Value>(8, 0)});
  v[s("12")] = v[s("23")] = 1;
  TPFunction f = extend_from_intervals(3, v);
  CHECK(f(s("13")) == 1);
  CHECK(satisfies_p3(f));

  TPFunction m = modular(4, {1, 2, 3, 4});
  std::map<Mask, Value> iv;
  for (Mask x : standard_intervals(4)) iv[x] = m(x);
  CHECK(extend_from_intervals(4, iv) == m);

  iv.erase(s("23"));
  CHECK_THROWS_AS(extend_from_intervals(4, iv), Error);
}

TEST_CASE("random interval valuations extend to TP functions") {
  std::mt19937_64 rng(20240601);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto v = random_values(standard_intervals(n), rng);
      TPFunction f = extend_from_intervals(n, v);
      REQUIRE(satisfies_p3(f));
      for (auto [x, val] : v) REQUIRE(f(x) == val);
    }
}

TEST_CASE("3-flip detection") {
  auto fl = find_3flips(standard_intervals(3));
  REQUIRE(fl.size() == 1);
  CHECK(fl[0] == FlipCortege3{0, 1, 2, 3, false, true});
  auto co = find_3flips(co_standard_intervals(3));
  REQUIRE(co.size() == 1);
  CHECK(co[0] == FlipCortege3{0, 1, 2, 3, true, true});
  auto bp = find_3flips(b_paper());
  bool found = false;
  for (const auto& c : bp) found = found || (c.x == 0 && c.i == 1 && c.j == 2 && c.k == 4 && c.lowering);
  CHECK(found);
}

TEST_CASE("3-flip application") {
  Collection up = apply_3flip(standard_intervals(3), find_3flips(standard_intervals(3))[0]);
  std::vector<Mask> want{0, s("1"), s("3"), s("12"), s("13"), s("23"), s("123")};
  CHECK(up == Collection(3, want));
  auto back = find_3flips(up);
  REQUIRE(back.size() == 1);
  CHECK(apply_3flip(up, back[0]) == standard_intervals(3));

  FlipCortege3 c{0, 1, 2, 4, true, false};
  for (const auto& f : find_3flips(b_paper()))
    if (f.x == 0 && f.i == 1 && f.j == 2 && f.k == 4) c = f;
  CHECK(apply_3flip(b_paper(), c) == b_paper().with(s("2"), s("14")));
  CHECK_THROWS_AS(apply_3flip(standard_intervals(3), FlipCortege3{0, 1, 2, 3, true, true}), Error);
}

TEST_CASE("descent to the standard basis") {
  CHECK(descend_to_standard(standard_intervals(5)).empty());
  auto d = descend_to_standard(b_paper());
  REQUIRE_FALSE(d.empty());
  CHECK(d[0].x == 0);
  CHECK(d[0].i == 1);
  CHECK(d[0].j == 2);
  CHECK(d[0].k == 4);
  Collection cur = b_paper();
  long long sum = cur.size_sum();
  for (const auto& f : d) {
    cur = apply_3flip(cur, f);
    CHECK(cur.size_sum() < sum);
    sum = cur.size_sum();
  }
  CHECK(cur == standard_intervals(4));

  std::vector<Mask> stuck{0, s("13")};
  CHECK_THROWS_AS(descend_to_standard(Collection(3, stuck)), Error);
}

TEST_CASE("descents replay backward to the start, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Collection& b : oracle_largest_ws(n)) {
      auto d = descend_to_standard(b);
      REQUIRE(static_cast<long long>(d.size()) <= b.size_sum());
      Collection cur = b;
      std::vector<Collection> trail{cur};
      for (const auto& f : d) trail.push_back(cur = apply_3flip(cur, f));
      REQUIRE(cur == standard_intervals(n));
      for (std::size_t q = d.size(); q-- > 0;) {
        FlipCortege3 r = d[q];
        r.lowering = !r.lowering;
        auto avail = find_3flips(cur);
        bool ok = false;
        for (const auto& a : avail) ok = ok || (a.x == r.x && a.i == r.i && a.j == r.j && a.k == r.k && !a.lowering);
        REQUIRE(ok);
        cur = cur.with(r.xik(), r.xj());
        REQUIRE(cur == trail[q]);
      }
    }
}

TEST_CASE("flips keep collections weakly separated, n <= 5") {
  for (int n = 3; n <= 5; ++n)
    for (const Collection& b : oracle_largest_ws(n))
      for (const auto& f : find_3flips(b)) {
        Collection nb = apply_3flip(b, f);
        REQUIRE(nb.size() == b.size());
        REQUIRE(is_ws_collection(nb));
        REQUIRE((nb.size_sum() < b.size_sum()) == f.lowering);
      }
}

TEST_CASE("extension from a basis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = random_values(b_paper(), rng);
    TPFunction f = extend_from_basis(b_paper(), v);
    CHECK(satisfies_p3(f));
    for (auto [x, val] : v) CHECK(f(x) == val);
  }
  std::map<Mask, Value> iv;
  for (Mask x : standard_intervals(4)) iv[x] = static_cast<Value>(rng() % 7);
  TPFunction g = extend_from_intervals(4, iv);
  for (const Collection& b : oracle_largest_ws(4)) {
    std::map<Mask, Value> r;
    for (Mask x : b) r[x] = g(x);
    REQUIRE(extend_from_basis(b, r) == g);
  }
  std::map<Mask, Value> partial{{0, 0}};
  CHECK_THROWS_AS(extend_from_basis(b_paper(), partial), Error);
}
