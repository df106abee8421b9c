#include "wsep/gtiling.hpp"

#include <algorithm>
#include <set>

namespace wsep {

std::vector<Edge> tile_edges(const Tile& t) {
  return {{t.x, t.i}, {t.x, t.j}, {t.l(), t.j}, {t.r(), t.i}};
}

std::string to_string(const Tile& t, int n) {
  return std::string(t.black ? "black" : "white") + " tau(" + to_string(t.x, n) + ";" +
         std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

GTiling::GTiling(int n, std::vector<Tile> tiles) : n_(n), tiles_(std::move(tiles)) {
  if (n < 1 || n > kMaxN) throw Error("bad-n", "tilings need 1 <= n <= 32");
  std::sort(tiles_.begin(), tiles_.end());
}

std::size_t GTiling::black_count() const {
  return static_cast<std::size_t>(std::count_if(tiles_.begin(), tiles_.end(), [](const Tile& t) { return t.black; }));
}

const Tile* GTiling::find(Mask x, int i, int j) const {
  auto it = std::lower_bound(tiles_.begin(), tiles_.end(), Tile{x, i, j, false});
  if (it != tiles_.end() && it->x == x && it->i == i && it->j == j) return &*it;
  return nullptr;
}

bool is_boundary_edge(const Edge& e, int n) {
  return e.tail == left_boundary_vertex(e.color - 1) || e.tail == right_boundary_vertex(e.color, n);
}

bool TGraph::terminal(Mask v) const {
  auto it = klass.find(v);
  return it != klass.end() && (it->second == VertexClass::TerminalBottom || it->second == VertexClass::TerminalTop);
}

std::vector<int> TGraph::in_colors(Mask v) const {
  std::vector<int> out;
  for (int c = n; c >= 1; --c)
    if (has(v, c) && edges.count({v & ~bit(c), c})) out.push_back(c);
  return out;
}

std::vector<int> TGraph::out_colors(Mask v) const {
  std::vector<int> out;
  for (int c = n; c >= 1; --c)
    if (!has(v, c) && edges.count({v, c})) out.push_back(c);
  return out;
}

TGraph build_graph(const GTiling& t) {
  TGraph g;
  g.n = t.n();
  if (t.n() == 1 && t.tiles().empty()) {
    g.vertices = {0, 1};
    g.klass = {{0, VertexClass::Ordinary}, {1, VertexClass::Ordinary}};
    g.edges[{0, 1}] = false;
    return g;
  }
  std::set<Mask> bottoms, tops, blackv;
  const auto& ts = t.tiles();
  for (int idx = 0; idx < static_cast<int>(ts.size()); ++idx) {
    const Tile& tl = ts[idx];
    for (const Edge& e : tile_edges(tl)) {
      g.edge_tiles[e].push_back(idx);
      g.edges[e] = g.edges[e] || tl.black;
    }
    for (Mask v : {tl.b(), tl.l(), tl.r(), tl.t()}) {
      g.vertex_tiles[v].push_back(idx);
      if (tl.black) blackv.insert(v);
    }
    if (tl.black) {
      bottoms.insert(tl.b());
      tops.insert(tl.t());
    }
  }
  for (auto& [v, idxs] : g.vertex_tiles) {
    VertexClass c = VertexClass::Ordinary;
    if (bottoms.count(v)) c = VertexClass::TerminalBottom;
    else if (tops.count(v)) c = VertexClass::TerminalTop;
    else if (blackv.count(v)) c = VertexClass::Mixed;
    g.klass[v] = c;
    g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end(), canonical_less);
  return g;
}

namespace {

struct Vec {
  long long x, y;
};

long long cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
int sgn(long long v) { return (v > 0) - (v < 0); }

// Rays of the two tile edges at corner v, with x_c = c.
std::pair<Vec, Vec> corner_rays(const Tile& t, Mask v) {
  long long i = t.i, j = t.j;
  if (v == t.b()) return {{i, 1}, {j, 1}};
  if (v == t.l()) return {{-i, -1}, {j, 1}};
  if (v == t.r()) return {{-j, -1}, {i, 1}};
  return {{-i, -1}, {-j, -1}};
}

bool in_cone(Vec u1, Vec u2, Vec g) {
  int s = sgn(cross(u1, u2));
  return s != 0 && sgn(cross(u1, g)) == s && sgn(cross(g, u2)) == s;
}

int coverage(const GTiling& t, const TGraph& g, Mask v, Vec dir) {
  int total = 0;
  auto it = g.vertex_tiles.find(v);
  if (it == g.vertex_tiles.end()) return 0;
  for (int idx : it->second) {
    const Tile& tl = t.tiles()[idx];
    auto [u1, u2] = corner_rays(tl, v);
    if (in_cone(u1, u2, dir)) total += tl.black ? -1 : 1;
  }
  return total;
}

// +1 if the tile lies to the left of the edge direction, -1 if to the right.
int tile_side(const Tile& t, const Edge& e) {
  int p = (t.i == e.color) ? t.j : t.i;
  int s = e.color > p ? 1 : -1;
  return has(e.tail, p) ? -s : s;
}

enum class Bd { Inner, Bottom, Top, Left, Right };

Bd boundary_kind(Mask v, int n) {
  if (v == 0) return Bd::Bottom;
  if (v == full_set(n)) return Bd::Top;
  for (int q = 1; q < n; ++q) {
    if (v == left_boundary_vertex(q)) return Bd::Left;
    if (v == right_boundary_vertex(q, n)) return Bd::Right;
  }
  return Bd::Inner;
}

std::string vs(Mask v, int n) { return to_string(v, n); }

}  // namespace

std::vector<Violation> validate(const GTiling& t) {
  std::vector<Violation> out;
  int n = t.n();
  const auto& ts = t.tiles();
  Mask u = full_set(n);
  for (const Tile& tl : ts) {
    if (tl.i < 1 || tl.j > n || tl.i >= tl.j || (tl.x & ~u) || has(tl.x, tl.i) || has(tl.x, tl.j))
      out.push_back({"tile", "malformed " + to_string(tl, n)});
  }
  if (!out.empty()) return out;
  for (std::size_t a = 1; a < ts.size(); ++a)
    if (ts[a].same_place(ts[a - 1])) out.push_back({"T1", "repeated tile " + to_string(ts[a], n)});
  if (n == 1) {
    if (!ts.empty()) out.push_back({"T1", "a tiling of Z_1 has no tiles"});
    return out;
  }
  TGraph g = build_graph(t);

  std::set<Edge> boundary;
  for (int q = 1; q <= n; ++q) {
    boundary.insert({left_boundary_vertex(q - 1), q});
    boundary.insert({right_boundary_vertex(q, n), q});
  }
  for (const Edge& e : boundary) {
    auto it = g.edge_tiles.find(e);
    std::size_t cnt = it == g.edge_tiles.end() ? 0 : it->second.size();
    if (cnt != 1)
      out.push_back({"T1", "boundary edge (" + vs(e.tail, n) + "," + std::to_string(e.color) + ") lies in " +
                               std::to_string(cnt) + " tiles"});
  }
  for (const auto& [e, idxs] : g.edge_tiles) {
    if (boundary.count(e)) continue;
    if (idxs.size() != 2)
      out.push_back({"T1", "inner edge (" + vs(e.tail, n) + "," + std::to_string(e.color) + ") lies in " +
                               std::to_string(idxs.size()) + " tiles"});
  }

  for (const auto& [e, idxs] : g.edge_tiles) {
    if (idxs.size() != 2) continue;
    const Tile& a = ts[idxs[0]];
    const Tile& b = ts[idxs[1]];
    bool same_side = tile_side(a, e) == tile_side(b, e);
    std::string where = to_string(a, n) + " / " + to_string(b, n);
    if (a.black && b.black) out.push_back({"T2", "black tiles share an edge: " + where});
    else if (!a.black && !b.black && same_side) out.push_back({"T2", "white tiles overlap: " + where});
    else if (a.black != b.black && !same_side) out.push_back({"T2", "white and black tiles do not overlap: " + where});
  }

  for (std::size_t a = 0; a < ts.size(); ++a) {
    if (!ts[a].black) continue;
    const Tile& tb = ts[a];
    for (std::size_t b = 0; b < ts.size(); ++b) {
      if (b == a || !ts[b].black) continue;
      for (Mask v : {ts[b].b(), ts[b].l(), ts[b].r(), ts[b].t()})
        if (v == tb.b() || v == tb.t())
          out.push_back({"T3", "terminal vertex " + vs(v, n) + " of " + to_string(tb, n) + " is shared with " +
                                   to_string(ts[b], n)});
    }
    if (!g.in_colors(tb.b()).empty()) out.push_back({"T3", "an edge enters the bottom of " + to_string(tb, n)});
    if (!g.out_colors(tb.t()).empty()) out.push_back({"T3", "an edge leaves the top of " + to_string(tb, n)});
  }

  Vec east{1, 0}, west{-1, 0}, up{2LL * n + 3, 4}, down{-(2LL * n + 3), -4};
  for (Mask v : g.vertices) {
    Bd bd = boundary_kind(v, n);
    int want1 = 1, want2 = 1;
    Vec d1 = east, d2 = west;
    if (g.terminal(v)) {
      if (bd != Bd::Inner) out.push_back({"T4", "terminal vertex " + vs(v, n) + " on the boundary"});
      want1 = want2 = 0;
    } else if (bd == Bd::Bottom) {
      d1 = up, d2 = down, want2 = 0;
    } else if (bd == Bd::Top) {
      d1 = down, d2 = up, want2 = 0;
    } else if (bd == Bd::Left) {
      want2 = 0;
    } else if (bd == Bd::Right) {
      d1 = west, d2 = east, want2 = 0;
    }
    int c1 = coverage(t, g, v, d1), c2 = coverage(t, g, v, d2);
    if (c1 != want1 || c2 != want2)
      out.push_back({"T4", "winding at " + vs(v, n) + " is (" + std::to_string(c1) + "," + std::to_string(c2) +
                               "), expected (" + std::to_string(want1) + "," + std::to_string(want2) + ")"});
  }
  for (int q = 0; q <= n; ++q)
    for (Mask v : {left_boundary_vertex(q), right_boundary_vertex(q, n)})
      if (!g.has_vertex(v)) out.push_back({"T1", "boundary vertex " + vs(v, n) + " missing"});

  if (g.vertices.size() + ts.size() != g.edges.size() + 1)
    out.push_back({"Euler", "|V|+|T| = " + std::to_string(g.vertices.size() + ts.size()) + " but |E|+1 = " +
                                std::to_string(g.edges.size() + 1)});
  return out;
}

void require_valid(const GTiling& t) {
  auto v = validate(t);
  if (!v.empty()) throw Error("invalid-tiling", v.front().rule + " " + v.front().detail);
}

std::vector<Tile> local_tiles(int n, Mask v, const std::vector<int>& in, const std::vector<int>& out,
                              const std::vector<Tile>& black_side, VertexClass cls) {
  std::vector<Tile> res;
  auto pair_tile = [](Mask x, int a, int b, bool black) {
    return Tile{x, std::min(a, b), std::max(a, b), black};
  };
  auto fail = [&](const std::string& why) {
    throw Error("mixedvert", "vertex " + to_string(v, n) + ": " + why);
  };
  if (cls == VertexClass::TerminalBottom || cls == VertexClass::TerminalTop) {
    bool bottom = cls == VertexClass::TerminalBottom;
    std::vector<int> c = bottom ? out : in;
    if ((bottom ? in : out).size() != 0 || c.size() < 3) fail("terminal fan malformed");
    std::sort(c.begin(), c.end());
    for (std::size_t s = 0; s + 1 < c.size(); ++s) {
      Mask x = bottom ? v : (v & ~bit(c[s]) & ~bit(c[s + 1]));
      res.push_back(pair_tile(x, c[s], c[s + 1], false));
    }
    Mask x = bottom ? v : (v & ~bit(c.front()) & ~bit(c.back()));
    res.push_back(pair_tile(x, c.front(), c.back(), true));
    std::sort(res.begin(), res.end());
    return res;
  }
  int r = 0, rp = 0;
  for (const Tile& b : black_side) {
    if (b.r() == v) ++r;
    else if (b.l() == v) ++rp;
    else fail("black tile not at a side corner");
  }
  int nin = static_cast<int>(in.size()), nout = static_cast<int>(out.size());
  Bd bd = boundary_kind(v, n);
  if (bd == Bd::Inner && !(r + rp < std::min(nin, nout))) fail("too many black tiles");
  if ((bd == Bd::Left && r) || (bd == Bd::Right && rp) || ((bd == Bd::Bottom || bd == Bd::Top) && (r || rp)))
    fail("black tile against the boundary");
  auto side_tile = [&](int inc, int outc, bool black) {
    Mask tail = v & ~bit(inc);
    return pair_tile(tail, inc, outc, black);
  };
  auto need = [&](bool ok) {
    if (!ok) fail("edge pattern does not fit the black tiles");
  };
  for (int s = 1; s <= r; ++s) {
    need(nout - r + s - 1 >= 0 && s - 1 < nin);
    res.push_back(side_tile(in[s - 1], out[nout - r + s - 1], true));
  }
  for (int s = 1; s <= rp; ++s) {
    need(nin - rp + s - 1 >= 0 && s - 1 < nout);
    res.push_back(side_tile(in[nin - rp + s - 1], out[s - 1], true));
  }
  for (int a = r; a + 1 <= nin - rp - 1; ++a) {
    Mask x = v & ~bit(in[a]) & ~bit(in[a + 1]);
    res.push_back(pair_tile(x, in[a], in[a + 1], false));
  }
  for (int a = rp; a + 1 <= nout - r - 1; ++a) res.push_back(pair_tile(v, out[a], out[a + 1], false));
  if (bd == Bd::Inner || bd == Bd::Right) {
    for (int s = 0; s <= r; ++s) {
      need(nout - r + s - 1 >= 0 && nout - r + s - 1 < nout && s < nin);
      res.push_back(side_tile(in[s], out[nout - r + s - 1], false));
    }
  }
  if (bd == Bd::Inner || bd == Bd::Left) {
    for (int s = 0; s <= rp; ++s) {
      need(nin - rp + s - 1 >= 0 && nin - rp + s - 1 < nin && s < nout);
      res.push_back(side_tile(in[nin - rp + s - 1], out[s], false));
    }
  }
  std::sort(res.begin(), res.end());
  return res;
}

TGraph classify_vertices(const GTiling& t) {
  require_valid(t);
  TGraph g = build_graph(t);
  if (t.n() == 1) return g;
  for (Mask v : g.vertices) {
    std::vector<Tile> actual, black_side;
    for (int idx : g.vertex_tiles.at(v)) {
      const Tile& tl = t.tiles()[idx];
      actual.push_back(tl);
      if (tl.black && (tl.l() == v || tl.r() == v)) black_side.push_back(tl);
    }
    std::sort(actual.begin(), actual.end());
    auto expect = local_tiles(t.n(), v, g.in_colors(v), g.out_colors(v), black_side, g.klass.at(v));
    if (expect != actual) throw Error("mixedvert", "local tile pattern differs at " + to_string(v, t.n()));
    // Black edges at a non-terminal vertex are exactly those of its black tiles.
    if (!g.terminal(v)) {
      for (int c : g.in_colors(v)) {
        bool black = g.edges.at({v & ~bit(c), c});
        bool want = std::any_of(black_side.begin(), black_side.end(), [&](const Tile& b) {
          return (b.l() == v && b.i == c) || (b.r() == v && b.j == c);
        });
        if (black != want) throw Error("mixedvert", "edge colour pattern differs at " + to_string(v, t.n()));
      }
    }
  }
  return g;
}

Collection spectrum(const GTiling& t) {
  TGraph g = classify_vertices(t);
  std::vector<Mask> v;
  for (Mask x : g.vertices)
    if (!g.terminal(x)) v.push_back(x);
  Collection c(t.n(), std::move(v));
  if (static_cast<long long>(c.size()) != largest_ws_size(t.n()))
    throw Error("bad-spectrum", "spectrum has " + std::to_string(c.size()) + " members");
  return c;
}

Collection full_spectrum(const GTiling& t) {
  TGraph g = classify_vertices(t);
  return Collection(t.n(), g.vertices);
}

Strip strip(const GTiling& t, int color) {
  int n = t.n();
  if (color < 1 || color > n) throw Error("bad-color", "strip colour outside [n]");
  Strip s;
  s.color = color;
  Edge start{left_boundary_vertex(color - 1), color};
  Edge finish{right_boundary_vertex(color, n), color};
  if (n == 1) {
    s.edges = {start};
    s.right = {start.tail};
    s.left = {start.head()};
    return s;
  }
  TGraph g = build_graph(t);
  Edge e = start;
  int prev = -1;
  s.edges.push_back(e);
  std::size_t guard = t.size() + 1;
  while (!(e == finish)) {
    const auto& idxs = g.edge_tiles.at(e);
    int next = -1;
    for (int idx : idxs)
      if (idx != prev) next = idx;
    if (next < 0) throw Error("split-strip", "strip " + std::to_string(color) + " stops early");
    const Tile& tl = t.tiles()[next];
    int p = tl.i == color ? tl.j : tl.i;
    Edge opp{e.tail ^ bit(p), color};
    s.tiles.push_back(tl);
    s.edges.push_back(opp);
    prev = next;
    e = opp;
    if (is_boundary_edge(e, n) && !(e == finish))
      throw Error("split-strip", "strip " + std::to_string(color) + " ends on the wrong boundary edge");
    if (--guard == 0) throw Error("cyclic-strip", "strip " + std::to_string(color) + " does not terminate");
  }
  std::size_t total = 0;
  for (const auto& [ed, blk] : g.edges)
    if (ed.color == color) ++total;
  std::set<Edge> seen(s.edges.begin(), s.edges.end());
  if (seen.size() != s.edges.size()) throw Error("cyclic-strip", "strip revisits an edge");
  if (total != s.edges.size())
    throw Error("cyclic-strip", std::to_string(total - s.edges.size()) + " edges of colour " + std::to_string(color) +
                                    " lie off the strip");
  for (const Edge& ed : s.edges) {
    s.right.push_back(ed.tail);
    s.left.push_back(ed.head());
  }
  for (std::size_t p = 0; p < s.tiles.size(); ++p) {
    const Tile& tl = s.tiles[p];
    int q = tl.i == color ? tl.j : tl.i;
    s.link_colors.push_back(q);
    bool fwd = s.right[p + 1] == (s.right[p] | bit(q));
    s.right_forward.push_back(fwd);
    bool expect = (!tl.black && color < q) || (tl.black && q < color);
    if (fwd != expect) throw Error("strip-direction", "boundary walk of strip " + std::to_string(color) + " at " + to_string(tl, n));
  }
  return s;
}

std::vector<Mask> Config::vertices() const {
  Mask bi = bit(i), bj = bit(j), bk = bit(k);
  if (kind == W) return {x | bi, x | bk, x | bi | bj, x | bi | bk, x | bj | bk};
  return {x | bi, x | bj, x | bk, x | bi | bj, x | bj | bk};
}

std::vector<Config> find_configs(const GTiling& t, Config::Kind kind, bool feasible_only) {
  std::vector<Config> out;
  int n = t.n();
  if (n < 3) return out;
  TGraph g = build_graph(t);
  Mask u = full_set(n);
  for (Mask x = 0;; ++x) {
    for (int i = 1; i <= n; ++i) {
      if (has(x, i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (has(x, j)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (has(x, k)) continue;
          Config c{kind, x, i, j, k};
          bool ok = true;
          for (Mask v : c.vertices()) {
            if (!g.has_vertex(v) || (feasible_only && g.terminal(v))) {
              ok = false;
              break;
            }
          }
          if (ok) out.push_back(c);
        }
      }
    }
    if (x == u) break;
  }
  return out;
}

namespace {

struct FlipPlan {
  FlipCase kase;
  std::vector<Tile> remove, add;
};

FlipPlan plan_lowering(const GTiling& t, const Config& c) {
  int n = t.n();
  if (c.kind != Config::W) throw Error("bad-config", "lowering flips need a W-configuration");
  TGraph g = build_graph(t);
  for (Mask v : c.vertices())
    if (!g.has_vertex(v) || g.terminal(v)) throw Error("infeasible", "configuration vertex " + to_string(v, n));
  Mask x = c.x, bi = bit(c.i), bj = bit(c.j), bk = bit(c.k);
  const Tile* tau = t.find(x | bi, c.j, c.k);
  const Tile* taup = t.find(x | bk, c.i, c.j);
  if (!tau || !taup || tau->black || taup->black)
    throw Error("infeasible", "the white tiles at Xi and Xk are missing");
  Mask v = x | bi | bk;
  if (g.klass.at(v) != VertexClass::Ordinary) throw Error("infeasible", "Xik is not ordinary");
  auto in = g.in_colors(v);
  for (int col : in)
    if (col < c.i || col > c.k) throw Error("infeasible", "edge entering Xik outside the cone");
  if (in.empty() || in.front() != c.k || in.back() != c.i) throw Error("infeasible", "fan at Xik malformed");
  int q = static_cast<int>(in.size()) - 1;
  const Tile* bar = t.find(x | bj, c.i, c.k);
  bool case2 = bar && bar->black;
  FlipPlan p;
  p.remove = {*tau, *taup};
  p.add = {{x, c.i, c.j, false}, {x, c.j, c.k, false}};
  if (q == 1) {
    const Tile* t1 = t.find(x, c.i, c.k);
    if (!t1 || t1->black) throw Error("infeasible", "tile tau(X;i,k) missing");
    p.remove.push_back(*t1);
  } else {
    p.add.push_back({x, c.i, c.k, true});
  }
  if (case2) {
    p.remove.push_back(*bar);
    p.kase = q == 1 ? FlipCase::TwoA : FlipCase::TwoB;
  } else {
    p.add.push_back({x | bj, c.i, c.k, false});
    p.kase = q == 1 ? FlipCase::OneA : FlipCase::OneB;
  }
  return p;
}

}  // namespace

FlipCase lowering_case(const GTiling& t, const Config& c) { return plan_lowering(t, c).kase; }

GTiling lowering_flip(const GTiling& t, const Config& c) {
  FlipPlan p = plan_lowering(t, c);
  std::vector<Tile> tiles;
  for (const Tile& tl : t.tiles())
    if (std::find(p.remove.begin(), p.remove.end(), tl) == p.remove.end()) tiles.push_back(tl);
  for (const Tile& tl : p.add) {
    if (t.find(tl.x, tl.i, tl.j) && std::find(p.remove.begin(), p.remove.end(), *t.find(tl.x, tl.i, tl.j)) == p.remove.end())
      throw Error("flip-failed", "new tile already present: " + to_string(tl, t.n()));
    tiles.push_back(tl);
  }
  GTiling out(t.n(), std::move(tiles));
  require_valid(out);
  return out;
}

GTiling reverse(const GTiling& t) {
  std::vector<Tile> tiles;
  Mask u = full_set(t.n());
  for (const Tile& tl : t.tiles()) tiles.push_back({u & ~tl.t(), tl.i, tl.j, tl.black});
  return GTiling(t.n(), std::move(tiles));
}

GTiling raising_flip(const GTiling& t, const Config& c) {
  if (c.kind != Config::M) throw Error("bad-config", "raising flips need an M-configuration");
  Mask xbar = full_set(t.n()) & ~(c.x | bit(c.i) | bit(c.j) | bit(c.k));
  return reverse(lowering_flip(reverse(t), Config{Config::W, xbar, c.i, c.j, c.k}));
}

GTiling from_spectrum(const Collection& b) {
  int n = b.n();
  auto fail = [](const std::string& why) -> GTiling { throw Error("not-a-spectrum", why); };
  if (static_cast<long long>(b.size()) != largest_ws_size(n))
    return fail("expected " + std::to_string(largest_ws_size(n)) + " sets, got " + std::to_string(b.size()));
  if (n == 1) return GTiling(1, {});
  if (n > 16) return fail("ground set too large for reconstruction");
  std::vector<char> in_b(std::size_t{1} << n, 0);
  for (Mask x : b) in_b[x] = 1;
  auto has_in = [&](Mask y) {
    for (int c = 1; c <= n; ++c)
      if (has(y, c) && in_b[y & ~bit(c)]) return true;
    return false;
  };
  auto has_out = [&](Mask y) {
    for (int c = 1; c <= n; ++c)
      if (!has(y, c) && in_b[y | bit(c)]) return true;
    return false;
  };

  std::map<Edge, bool> edges;
  for (Mask x : b)
    for (int c = 1; c <= n; ++c)
      if (!has(x, c) && in_b[x | bit(c)]) edges[{x, c}] = false;

  std::map<Mask, VertexClass> klass;
  std::set<Tile> black_bottom, black_top;
  Mask u = full_set(n);
  for (Mask x = 0;; ++x) {
    if (!in_b[x]) {
      std::vector<int> up, down;
      bool up_free = false, down_free = false;
      for (int c = 1; c <= n; ++c) {
        if (!has(x, c) && in_b[x | bit(c)]) {
          up.push_back(c);
          up_free = up_free || !has_in(x | bit(c));
        }
        if (has(x, c) && in_b[x & ~bit(c)]) {
          down.push_back(c);
          down_free = down_free || !has_out(x & ~bit(c));
        }
      }
      bool bottom = up.size() >= 3 && up_free;
      bool top = down.size() >= 3 && down_free;
      if (bottom && top) return fail("set " + to_string(x, n) + " would be both a bottom and a top");
      if (bottom) {
        klass[x] = VertexClass::TerminalBottom;
        for (int c : up) edges[{x, c}] = false;
        black_bottom.insert({x, up.front(), up.back(), true});
      } else if (top) {
        klass[x] = VertexClass::TerminalTop;
        for (int c : down) edges[{x & ~bit(c), c}] = false;
        black_top.insert({x & ~bit(down.front()) & ~bit(down.back()), down.front(), down.back(), true});
      }
    }
    if (x == u) break;
  }
  if (black_bottom != black_top) return fail("terminal fans do not pair into black tiles");
  for (const Tile& tl : black_bottom)
    for (const Edge& e : tile_edges(tl)) {
      auto it = edges.find(e);
      if (it == edges.end()) return fail("black tile " + to_string(tl, n) + " lacks an edge");
      it->second = true;
    }

  TGraph g;
  g.n = n;
  g.edges = edges;
  for (Mask x : b) klass[x] = VertexClass::Ordinary;
  for (const Tile& tl : black_bottom)
    for (Mask v : {tl.l(), tl.r()}) {
      auto it = klass.find(v);
      if (it == klass.end() || it->second == VertexClass::TerminalBottom || it->second == VertexClass::TerminalTop)
        return fail("side corner of " + to_string(tl, n) + " is not in the spectrum");
      it->second = VertexClass::Mixed;
    }
  g.klass = klass;

  std::map<Tile, int> seen;
  for (auto& [v, cls] : klass) {
    std::vector<Tile> side;
    for (const Tile& tl : black_bottom)
      if (tl.l() == v || tl.r() == v) side.push_back(tl);
    std::vector<Tile> loc;
    try {
      loc = local_tiles(n, v, g.in_colors(v), g.out_colors(v), side, cls);
    } catch (const Error& e) {
      return fail(e.what());
    }
    for (const Tile& tl : loc) ++seen[tl];
  }
  std::vector<Tile> tiles;
  for (auto& [tl, cnt] : seen) {
    if (cnt != 4) return fail("tile " + to_string(tl, n) + " seen at " + std::to_string(cnt) + " corners");
    tiles.push_back(tl);
  }
  GTiling t(n, std::move(tiles));
  auto viol = validate(t);
  if (!viol.empty()) return fail("assembled tiling fails " + viol.front().rule + ": " + viol.front().detail);
  Collection got;
  try {
    got = spectrum(t);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (!(got == b)) return fail("assembled tiling has a different spectrum");
  return t;
}

GTiling standard_tiling(int n) { return from_spectrum(standard_intervals(n)); }

std::vector<Config> descend(const GTiling& t) {
  std::vector<Config> seq;
  GTiling cur = t;
  while (true) {
    auto cs = find_configs(cur, Config::W, true);
    if (cs.empty()) break;
    seq.push_back(cs.front());
    cur = lowering_flip(cur, cs.front());
  }
  if (cur.black_count() != 0 || !(spectrum(cur) == standard_intervals(t.n())))
    throw Error("descent-failed", "descent stopped away from the standard tiling");
  return seq;
}

}  // namespace wsep
