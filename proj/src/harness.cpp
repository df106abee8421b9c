#include "wsep/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>
#include <thread>

#include "wsep/surgery.hpp"
#include "wsep/tropical.hpp"

namespace wsep {

namespace {

using Bits = std::uint64_t;

struct CliqueSearch {
  std::vector<Bits> adj;
  std::size_t target;
  std::vector<Bits> found;

  void run(Bits r, Bits p, Bits x) {
    if (static_cast<std::size_t>(std::popcount(r) + std::popcount(p)) < target) return;
    if (!p && !x) {
      if (static_cast<std::size_t>(std::popcount(r)) == target) found.push_back(r);
      return;
    }
    Bits px = p | x;
    int pivot = std::countr_zero(px), best = -1;
    for (Bits s = px; s; s &= s - 1) {
      int u = std::countr_zero(s);
      int c = std::popcount(p & adj[u]);
      if (c > best) best = c, pivot = u;
    }
    for (Bits s = p & ~adj[pivot]; s; s &= s - 1) {
      int v = std::countr_zero(s);
      Bits bv = Bits{1} << v;
      run(r | bv, p & adj[v], x & adj[v]);
      p &= ~bv;
      x |= bv;
    }
  }
};

void guard(bool ok, bool force, const std::string& what) {
  if (!ok && !force) throw Error("size-guard", what + " is beyond the default guard; pass --force");
}

std::vector<Mask> band(int n, int lo, int hi) {
  std::vector<Mask> u;
  for (Mask x = 0; x <= full_set(n); ++x) {
    if (card(x) >= lo && card(x) <= hi) u.push_back(x);
    if (x == full_set(n)) break;
  }
  return u;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Geometry {
  int n;
  std::vector<double> xs;
  double sx, sy, minx, maxx, height;

  explicit Geometry(int n_) : n(n_) {
    double mean = (std::ldexp(1.0, n) - 1) / std::max(1, n);
    for (int i = 1; i <= n; ++i) xs.push_back(std::ldexp(1.0, i - 1) - mean);
    sx = 480.0 / std::max(1.0, std::ldexp(1.0, n) - 1);
    sy = 60;
    minx = maxx = 0;
    for (Mask x = 0;; ++x) {
      double px = raw_x(x);
      minx = std::min(minx, px);
      maxx = std::max(maxx, px);
      if (x == full_set(n)) break;
    }
    height = n * sy;
  }
  double raw_x(Mask x) const {
    double s = 0;
    for (int i : elements(x)) s += xs[i - 1];
    return s;
  }
  double px(Mask x) const { return 40 + (raw_x(x) - minx) * sx; }
  double py(Mask x) const { return 40 + height - card(x) * sy; }
  double width() const { return 80 + (maxx - minx) * sx; }
  std::string pt(double x, double y) const { return fmt(x) + "," + fmt(y); }
  std::string pt(Mask v) const { return pt(px(v), py(v)); }
};

std::string svg_open(const Geometry& g) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(g.width()) + "\" height=\"" +
         fmt(g.height + 80) + "\" viewBox=\"0 0 " + fmt(g.width()) + " " + fmt(g.height + 80) + "\">\n";
}

void draw_tiles(std::ostringstream& out, const GTiling& t, const Geometry& g, bool faint) {
  for (const Tile& tl : t.tiles()) {
    std::string pts = g.pt(tl.b()) + " " + g.pt(tl.l()) + " " + g.pt(tl.t()) + " " + g.pt(tl.r());
    if (tl.black)
      out << "<polygon class=\"black-tile\" points=\"" << pts << "\" fill=\"#999\" fill-opacity=\"0.5\" stroke=\"#000\" stroke-width=\""
          << (faint ? "1.5" : "3") << "\"/>\n";
    else
      out << "<polygon class=\"white-tile\" points=\"" << pts << "\" fill=\"none\" stroke=\""
          << (faint ? "#bbb" : "#333") << "\" stroke-width=\"1\"/>\n";
  }
}

}  // namespace

std::vector<Collection> ws_cliques(int n, const std::vector<Mask>& universe, std::size_t target) {
  std::size_t u = universe.size();
  if (u > 64) throw Error("size-guard", "clique universe exceeds 64 sets");
  CliqueSearch cs;
  cs.target = target;
  cs.adj.assign(u, 0);
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b)
      if (a != b && weakly_separated(universe[a], universe[b])) cs.adj[a] |= Bits{1} << b;
  Bits all = u == 64 ? ~Bits{0} : (Bits{1} << u) - 1;
  Bits forced = 0;
  for (std::size_t a = 0; a < u; ++a)
    if ((cs.adj[a] | (Bits{1} << a)) == all) forced |= Bits{1} << a;
  Bits p = all & ~forced;
  for (Bits s = forced; s; s &= s - 1) p &= cs.adj[std::countr_zero(s)];
  cs.run(forced, p, 0);
  std::vector<Collection> out;
  for (Bits r : cs.found) {
    std::vector<Mask> v;
    for (Bits s = r; s; s &= s - 1) v.push_back(universe[std::countr_zero(s)]);
    out.emplace_back(n, std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Collection> oracle_largest_ws(int n, bool force) {
  if (n < 1) throw Error("bad-n", "need n >= 1");
  guard(n <= 6, force, "cube oracle for n > 6");
  std::vector<Mask> u = band(n, 0, n);
  if (!weakly_separated(0, full_set(n))) throw Error("internal", "extremes are not separated");
  return ws_cliques(n, u, static_cast<std::size_t>(largest_ws_size(n)));
}

std::vector<HSCollection> oracle_largest_hs_ws(int n, int m, bool force) {
  if (m < 0 || m > n) throw Error("bad-level", "need 0 <= m <= n");
  guard(n <= 8, force, "hyper-simplex oracle for n > 8");
  std::vector<HSCollection> out;
  for (const Collection& c : ws_cliques(n, band(n, m, m), static_cast<std::size_t>(hs_largest_size(n, m))))
    out.emplace_back(n, m, c.sets());
  return out;
}

std::vector<Collection> oracle_largest_truncated(int n, int mlo, int mhi, bool force) {
  if (!(0 <= mlo && mlo <= mhi && mhi <= n)) throw Error("bad-level", "need 0 <= mlo <= mhi <= n");
  guard(n <= 6, force, "truncated-cube oracle for n > 6");
  return ws_cliques(n, band(n, mlo, mhi), static_cast<std::size_t>(truncated_largest_size(n, mlo, mhi)));
}

std::vector<Collection> flip_neighbors(const Collection& c, FlipKind kind) {
  std::vector<Collection> out;
  if (kind != FlipKind::Four)
    for (const auto& f : find_3flips(c)) out.push_back(f.lowering ? c.with(f.xj(), f.xik()) : c.with(f.xik(), f.xj()));
  if (kind != FlipKind::Three) {
    std::map<int, std::vector<Mask>> levels;
    for (Mask x : c) levels[card(x)].push_back(x);
    for (auto& [m, sets] : levels)
      for (const auto& f : find_4flips(HSCollection(c.n(), m, sets)))
        out.push_back(f.lowering ? c.with(f.xik(), f.xjl()) : c.with(f.xjl(), f.xik()));
  }
  return out;
}

std::vector<std::string> OrbitReport::manifest() const {
  std::vector<std::string> v;
  for (const auto& c : members) v.push_back(hex_digest(c));
  std::sort(v.begin(), v.end());
  return v;
}

OrbitReport flip_orbit(const Collection& start, FlipKind kind, bool with_diameter) {
  OrbitReport rep;
  rep.n = start.n();
  std::map<Collection, int> id{{start, 0}};
  std::vector<Collection> order{start};
  std::vector<std::vector<int>> adj(1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (Collection& nb : flip_neighbors(order[k], kind)) {
      auto [it, fresh] = id.emplace(nb, static_cast<int>(order.size()));
      if (fresh) {
        order.push_back(std::move(nb));
        adj.emplace_back();
      }
      adj[k].push_back(it->second);
    }
  }
  std::size_t darts = 0;
  for (auto& a : adj) darts += a.size();
  rep.edges = darts / 2;
  if (with_diameter) {
    std::size_t v = order.size();
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    std::vector<int> ecc(v, 0);
    auto ecc_range = [&](std::size_t from, std::size_t step) {
      std::vector<int> dist(v);
      for (std::size_t s = from; s < v; s += step) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(static_cast<int>(s));
        int far = 0;
        while (!q.empty()) {
          int a = q.front();
          q.pop();
          far = std::max(far, dist[a]);
          for (int b : adj[a])
            if (dist[b] < 0) dist[b] = dist[a] + 1, q.push(b);
        }
        ecc[s] = far;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(ecc_range, w, workers);
    for (auto& th : pool) th.join();
    rep.diameter = *std::max_element(ecc.begin(), ecc.end());
  }
  for (auto& [c, k] : id) rep.members.push_back(c);
  std::sort(rep.members.begin(), rep.members.end(), [](const Collection& a, const Collection& b) { return a < b; });
  return rep;
}

std::vector<GTiling> enumerate_tilings(int n) {
  if (n < 1) throw Error("bad-n", "need n >= 1");
  std::vector<GTiling> level{GTiling(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<GTiling> next;
    for (const GTiling& t : level)
      for_each_legal_path(t, [&](const LegalPath& p) { next.push_back(expand(t, p)); });
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

bool TheoremAReport::all_equal() const {
  return problems.empty() && orbit == wirings && wirings == tilings && tilings == oracle && reconstructed == orbit.size();
}

std::vector<std::string> TheoremAReport::manifest(const std::set<Collection>& s) {
  std::vector<std::string> v;
  for (const auto& c : s) v.push_back(hex_digest(c));
  std::sort(v.begin(), v.end());
  return v;
}

TheoremAReport verify_theorem_a(int n, bool force) {
  if (n < 1) throw Error("bad-n", "need n >= 1");
  guard(n <= 5, force, "Theorem A check for n > 5");
  TheoremAReport rep;
  rep.n = n;
  auto orb = flip_orbit(standard_intervals(n), FlipKind::Three, false);
  rep.orbit.insert(orb.members.begin(), orb.members.end());
  for (const Collection& c : rep.orbit) {
    try {
      if (spectrum(from_spectrum(c)) == c) ++rep.reconstructed;
    } catch (const Error& e) {
      rep.problems.push_back("from_spectrum rejects " + c.to_string() + ": " + e.what());
    }
  }
  auto tilings = enumerate_tilings(n);
  rep.tiling_count = tilings.size();
  for (const GTiling& t : tilings) {
    Collection b = spectrum(t);
    rep.tilings.insert(b);
    Wiring w = tiling_to_wiring(t);
    auto bad = validate_wiring(w);
    if (!bad.empty()) {
      rep.problems.push_back("wiring of " + b.to_string() + " fails " + bad.front().rule);
      continue;
    }
    rep.wirings.insert(spectrum(w));
    if (!(wiring_to_tiling(w) == t)) rep.problems.push_back("wiring round trip differs for " + b.to_string());
  }
  auto oracle = oracle_largest_ws(n, force);
  rep.oracle.insert(oracle.begin(), oracle.end());
  return rep;
}

std::string render_svg(const GTiling& t) {
  require_valid(t);
  Geometry g(t.n());
  std::ostringstream out;
  out << svg_open(g);
  draw_tiles(out, t, g, false);
  TGraph gr = build_graph(t);
  for (Mask v : gr.vertices) {
    if (gr.terminal(v))
      out << "<circle class=\"terminal\" cx=\"" << fmt(g.px(v)) << "\" cy=\"" << fmt(g.py(v))
          << "\" r=\"7\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    out << "<circle cx=\"" << fmt(g.px(v)) << "\" cy=\"" << fmt(g.py(v)) << "\" r=\"2.5\" fill=\"#000\"/>\n";
    out << "<text x=\"" << fmt(g.px(v) + 5) << "\" y=\"" << fmt(g.py(v) - 5) << "\" font-size=\"10\">"
        << to_string(v, t.n()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Wiring& w) {
  GTiling t = wiring_to_tiling(w);
  Geometry g(t.n());
  std::ostringstream out;
  out << svg_open(g);
  draw_tiles(out, t, g, true);
  auto mid = [&](const Edge& e) { return g.pt((g.px(e.tail) + g.px(e.head())) / 2, (g.py(e.tail) + g.py(e.head())) / 2); };
  auto centre = [&](const Tile& tl) { return std::make_pair((g.px(tl.b()) + g.px(tl.t())) / 2, (g.py(tl.b()) + g.py(tl.t())) / 2); };
  for (int c = 1; c <= t.n(); ++c) {
    Strip s = strip(t, c);
    std::string pts = mid(s.edges[0]);
    for (std::size_t p = 0; p < s.tiles.size(); ++p) {
      auto [cx, cy] = centre(s.tiles[p]);
      pts += " " + g.pt(cx, cy) + " " + mid(s.edges[p + 1]);
    }
    out << "<polyline class=\"wire\" points=\"" << pts << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    auto [ex, ey] = std::make_pair((g.px(s.edges[0].tail) + g.px(s.edges[0].head())) / 2,
                                   (g.py(s.edges[0].tail) + g.py(s.edges[0].head())) / 2);
    out << "<text x=\"" << fmt(ex - 14) << "\" y=\"" << fmt(ey + 4) << "\" font-size=\"10\">w" << c << "</text>\n";
  }
  for (const Tile& tl : t.tiles()) {
    if (!tl.black) continue;
    auto [cx, cy] = centre(tl);
    out << "<polygon class=\"black-crossing\" points=\"" << g.pt(cx, cy - 6) << " " << g.pt(cx + 6, cy) << " "
        << g.pt(cx, cy + 6) << " " << g.pt(cx - 6, cy) << "\" fill=\"#000\"/>\n";
  }
  TGraph gr = build_graph(t);
  for (Mask v : gr.vertices)
    if (gr.terminal(v))
      out << "<circle class=\"cyclic-face\" cx=\"" << fmt(g.px(v)) << "\" cy=\"" << fmt(g.py(v))
          << "\" r=\"5\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"2,2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace wsep
