// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "invariants.hpp"
#include "wsep/gtiling.hpp"
#include "wsep/harness.hpp"
#include "wsep/hypersimplex.hpp"
#include "wsep/surgery.hpp"
#include "wsep/tropical.hpp"
#include "wsep/wiring.hpp"

using namespace wsep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Collection b_paper() {
  std::vector<Mask> v;
  for (auto x : {"-", "1", "4", "12", "14", "23", "24", "34", "123", "234", "1234"}) v.push_back(parse_shorthand(x, 4));
  return Collection(4, v);
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  Outcome() { note << std::fixed << std::setprecision(3); }
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

std::vector<Collection> orbit(int n) { return flip_orbit(standard_intervals(n), FlipKind::Three, false).members; }

void cardinality(Outcome& o) {
  for (int n : {3, 4, 5}) {
    auto t0 = Clock::now();
    auto m = orbit(n);
    double dt = seconds_since(t0);
    for (const auto& c : m)
      if (static_cast<long long>(c.size()) != largest_ws_size(n)) o.fail("size mismatch at n=" + std::to_string(n));
    double limit = n <= 4 ? 1.0 : 120.0;
    if (dt > limit) o.fail("n=" + std::to_string(n) + " took " + std::to_string(dt) + "s");
    o.note << "n=" << n << ": " << m.size() << " members, " << dt << "s; ";
  }
}

void figure(Outcome& o) {
  auto t0 = Clock::now();
  Collection b = b_paper();
  if (!is_largest_ws(b)) o.fail("not largest ws");
  descend_to_standard(b);
  GTiling t = from_spectrum(b);
  if (t.size() != 8) o.fail("tile count " + std::to_string(t.size()));
  if (t.black_count() != 1) o.fail("black count");
  const Tile* black = t.find(parse_shorthand("2", 4), 1, 4);
  if (!black || !black->black) o.fail("black tile is not tau(2;1,4)");
  TGraph g = classify_vertices(t);
  std::vector<Mask> term;
  for (Mask v : g.vertices)
    if (g.terminal(v)) term.push_back(v);
  if (term != std::vector<Mask>{parse_shorthand("2", 4), parse_shorthand("124", 4)}) o.fail("terminal vertices");
  Wiring w = tiling_to_wiring(t);
  std::size_t bc = 0;
  for (const auto& c : w.crossings) bc += c.black;
  if (bc != 1) o.fail("black crossings");
  if (cyclic_face_count(w) != 2) o.fail("cyclic faces");
  double dt = seconds_since(t0);
  if (dt > 1.0) o.fail("too slow");
  o.note << "8 tiles, 1 black tau(2;1,4), terminals {2},{124}, 1 black crossing, " << cyclic_face_count(w)
         << " cyclic faces, " << dt << "s";
}

void theorem_a(Outcome& o) {
  for (int n : {3, 4, 5}) {
    auto t0 = Clock::now();
    TheoremAReport r = verify_theorem_a(n);
    double dt = seconds_since(t0);
    if (!r.all_equal() || !r.problems.empty()) o.fail("n=" + std::to_string(n) + " manifests differ");
    o.note << "n=" << n << ": " << r.orbit.size() << " in each, " << dt << "s; ";
  }
}

void duality(Outcome& o) {
  std::size_t k = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Collection& c : orbit(n)) {
      GTiling t = from_spectrum(c);
      if (!(wiring_to_tiling(tiling_to_wiring(t)) == t)) o.fail("round trip broke at " + c.to_string());
      ++k;
    }
  o.note << k << " orbit members";
}

void uniqueness(Outcome& o) {
  std::size_t k = 0;
  for (int n = 1; n <= 5; ++n) {
    std::set<GTiling> all;
    for (const GTiling& t : enumerate_tilings(n)) all.insert(t);
    for (const Collection& c : orbit(n)) {
      GTiling t = from_spectrum(c);
      if (!(spectrum(t) == c) || !(from_spectrum(spectrum(t)) == t)) o.fail("reconstruction at " + c.to_string());
      if (!all.count(t)) o.fail("reconstructed tiling missing from the enumeration");
      ++k;
    }
    if (all.size() != orbit(n).size()) o.fail("tiling count differs from orbit size");
  }
  o.note << k << " orbit members";
}

void bijection(Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t sum = 0;
    std::vector<GTiling> lower = enumerate_tilings(n - 1);
    for (const GTiling& tp : lower) {
      sum += count_legal_paths(tp);
      for (const LegalPath& p : legal_paths(tp)) {
        Contraction c = contract(expand(tp, p));
        if (!(c.tiling == tp) || !(c.path == p)) o.fail("contract after expand");
      }
    }
    for (const Collection& b : orbit(n)) {
      GTiling t = from_spectrum(b);
      Contraction c = contract(t);
      if (!(expand(c.tiling, c.path) == t)) o.fail("expand after contract");
    }
    std::size_t tilings = orbit(n).size();
    if (n >= 4) {
      if (sum != tilings) o.fail("count mismatch at n=" + std::to_string(n));
      o.note << "n=" << n << ": " << tilings << " = sum " << sum << "; ";
    }
  }
}

void invariants(Outcome& o) {
  std::size_t k = 0;
  for (int n = 1; n <= 5; ++n)
    for (const GTiling& t : enumerate_tilings(n)) {
      auto p = inv::all(t);
      if (!p.empty()) o.fail(p.front());
      ++k;
    }
  o.note << k << " tilings checked";
}

void tropical(Outcome& o) {
  std::mt19937_64 rng(1729);
  for (int n : {4, 5}) {
    auto bases = orbit(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::map<Mask, Value> v;
      for (Mask x : standard_intervals(n)) v[x] = static_cast<Value>(rng() % 21) - 10;
      TPFunction f = extend_from_intervals(n, v);
      if (!satisfies_p3(f)) o.fail("P3 fails at n=" + std::to_string(n));
      for (const Collection& b : bases) {
        std::map<Mask, Value> r;
        for (Mask x : b) r[x] = f(x);
        if (!(extend_from_basis(b, r) == f)) o.fail("basis extension at " + b.to_string());
      }
    }
    o.note << "n=" << n << ": 200 valuations x " << bases.size() << " bases; ";
  }
}

void hypersimplex(Outcome& o) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m)
      if (static_cast<long long>(standard_basis(n, m).size()) != m * (n - m) + 1) o.fail("|IS| formula");
  for (auto [n, m] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
    auto orb = flip_orbit(standard_basis(n, m).sets(), FlipKind::Four, false).members;
    std::set<Collection> a(orb.begin(), orb.end()), b;
    for (const auto& c : oracle_largest_hs_ws(n, m)) b.insert(c.sets());
    if (a != b) o.fail("orbit differs from oracle at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    for (const Collection& c : orb) {
      HSCollection cur(n, m, c.sets());
      long long e = eta(cur);
      for (const auto& f : descend_hs(cur)) {
        cur = apply_4flip(cur, f);
        if (eta(cur) >= e) o.fail("eta did not drop");
        e = eta(cur);
      }
      if (!(cur == standard_basis(n, m))) o.fail("descent ended elsewhere");
    }
    o.note << "(" << n << "," << m << "): " << a.size() << "; ";
  }
  if (flip_orbit(standard_basis(4, 2).sets(), FlipKind::Four, false).members.size() != 2) o.fail("Delta_4^2 orbit");
  for (auto [n, lo, hi] : {std::tuple{3, 1, 2}, {4, 1, 3}}) {
    auto members = oracle_largest_truncated(n, lo, hi);
    for (const Collection& c : members) {
      TruncatedDescent d = descend_truncated(c, lo, hi);
      Collection cur = c;
      for (const auto& f : d.three) cur = cur.with(f.xj(), f.xik());
      std::vector<Mask> keep;
      for (Mask x : cur)
        if (card(x) == lo) keep.push_back(x);
      HSCollection lv(n, lo, keep);
      for (const auto& f : d.four) lv = apply_4flip(lv, f);
      if (!(lv == standard_basis(n, lo))) o.fail("truncated descent");
      for (Mask x : cur)
        if (card(x) > lo && !is_interval(x)) o.fail("truncated descent left a non-interval");
    }
    o.note << "truncated (" << n << "," << lo << "," << hi << "): " << members.size() << "; ";
  }
}

void embedding(Outcome& o) {
  if (!(embed_delta(standard_intervals(3), 3) == co_standard_basis(6, 3))) o.fail("I_3 does not embed as co-standard");
  auto m = orbit(3);
  for (const Collection& b : m) descend_hs(embed_delta(b, 3));
  o.note << m.size() << " members of the n=3 orbit descend";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion all[] = {
      {1, "cardinality law", cardinality},     {2, "figure reproduction", figure},
      {3, "theorem A equivalence", theorem_a}, {4, "duality round trip", duality},
      {5, "uniqueness", uniqueness},           {6, "contraction bijection", bijection},
      {7, "structural invariants", invariants}, {8, "tropical suite", tropical},
      {9, "hyper-simplex", hypersimplex},      {10, "embedding", embedding},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %2d %s [%.2fs] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0), o.note.str().c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
