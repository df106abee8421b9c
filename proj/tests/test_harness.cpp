#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wsep/harness.hpp"

using namespace wsep;

namespace {

Mask s(const char* t) { return parse_shorthand(t, 9); }

Collection b_paper() {
  std::vector<Mask> v;
  for (auto x : {"-", "1", "4", "12", "14", "23", "24", "34", "123", "234", "1234"}) v.push_back(s(x));
  return Collection(4, v);
}

}  // namespace

TEST_CASE("clique oracle matches backtracking, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto lib = oracle_largest_ws(n);
    std::set<Collection> a(lib.begin(), lib.end());
    std::set<Collection> b;
    for (const auto& v : oracle::largest_ws(n, largest_ws_size(n), oracle::power_set(n))) b.insert(Collection(n, v));
    CHECK(a == b);
  }
}

TEST_CASE("frozen oracle counts") {
  std::vector<std::size_t> want{1, 1, 1, 2, 10, 124};
  for (int n = 1; n <= 5; ++n) CHECK(oracle_largest_ws(n).size() == want[n]);
  auto two = oracle_largest_ws(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Collection(2, {0, s("1"), s("2"), s("12")}));
  for (const Collection& c : oracle_largest_ws(4)) {
    CHECK(c.contains(0));
    CHECK(c.contains(full_set(4)));
  }
  CHECK_THROWS_AS(oracle_largest_ws(7), Error);
}

TEST_CASE("flip orbits") {
  CHECK(flip_orbit(standard_intervals(2), FlipKind::Three).members.size() == 1);
  OrbitReport r4 = flip_orbit(standard_intervals(4), FlipKind::Three);
  CHECK(r4.members.size() == oracle_largest_ws(4).size());
  CHECK(r4.edges == 12);
  CHECK(r4.diameter == 4);
  std::set<Collection> members(r4.members.begin(), r4.members.end());
  CHECK(members.count(b_paper()));
  OrbitReport r5 = flip_orbit(standard_intervals(5), FlipKind::Three);
  CHECK(r5.members.size() == 124);
  CHECK(r5.edges == 254);
  CHECK(r5.diameter == 10);
  CHECK(r5.manifest() == flip_orbit(co_standard_intervals(5), FlipKind::Three).manifest());
  auto man = r5.manifest();
  CHECK(std::is_sorted(man.begin(), man.end()));
}

TEST_CASE("n = 6: orbit, oracle and tilings agree") {
  OrbitReport r = flip_orbit(standard_intervals(6), FlipKind::Three);
  CHECK(r.members.size() == 3694);
  CHECK(r.edges == 11328);
  CHECK(r.diameter == 20);
  auto oracle = oracle_largest_ws(6);
  CHECK(std::set<Collection>(oracle.begin(), oracle.end()) == std::set<Collection>(r.members.begin(), r.members.end()));
  std::set<Collection> spectra;
  for (const GTiling& t : enumerate_tilings(6)) spectra.insert(spectrum(t));
  CHECK(spectra == std::set<Collection>(r.members.begin(), r.members.end()));
}

TEST_CASE("flip neighbours are symmetric") {
  for (const Collection& c : oracle_largest_ws(4))
    for (const Collection& d : flip_neighbors(c, FlipKind::Three)) {
      auto back = flip_neighbors(d, FlipKind::Three);
      CHECK(std::find(back.begin(), back.end(), c) != back.end());
    }
}

TEST_CASE("tiling enumeration") {
  std::vector<std::size_t> want{1, 1, 1, 2, 10, 124};
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_tilings(n).size() == want[n]);
}

TEST_CASE("theorem A at n = 3, 4") {
  for (int n : {3, 4}) {
    TheoremAReport r = verify_theorem_a(n);
    CHECK(r.problems.empty());
    CHECK(r.all_equal());
    CHECK(r.tiling_count == r.oracle.size());
    CHECK(r.reconstructed == r.orbit.size());
    if (n == 4) CHECK(r.orbit.count(b_paper()));
    CHECK(TheoremAReport::manifest(r.orbit) == TheoremAReport::manifest(r.oracle));
  }
}

TEST_CASE("svg output") {
  GTiling t = from_spectrum(b_paper());
  std::string a = render_svg(t);
  CHECK(a == render_svg(t));
  CHECK(a.find("<svg") != std::string::npos);
  auto count = [](const std::string& hay, const std::string& needle) {
    std::size_t k = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++k;
    return k;
  };
  CHECK(count(a, "class=\"terminal\"") == 2);
  CHECK(count(a, "class=\"black-tile\"") == 1);
  std::string pure = render_svg(standard_tiling(4));
  CHECK(count(pure, "class=\"terminal\"") == 0);
  CHECK(count(pure, "class=\"black-tile\"") == 0);
  std::string w = render_svg(tiling_to_wiring(t));
  CHECK(w == render_svg(tiling_to_wiring(t)));
  CHECK(count(w, "class=\"cyclic-face\"") == 2);
  CHECK(count(w, "class=\"wire\"") == 4);
}
