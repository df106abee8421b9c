#include "wsep/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

namespace wsep {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

Edge path_edge(const LegalPath& p, std::size_t q) {
  Mask a = p.vertices[q], b = p.vertices[q + 1];
  return {std::min(a, b), p.colors[q]};
}

// Right boundary edge between levels h-1 and h.
Edge right_boundary_edge(int h, int n) { return {interval(n - h + 2, n), n - h + 1}; }

struct Move {
  Mask to;
  int color;
  bool forward;
};

bool step_ok(bool have_last, bool last_fwd, int last_color, bool fwd, int color) {
  if (!have_last) return fwd;
  if (!last_fwd && !fwd) return false;
  if (last_fwd && !fwd) return last_color > color;
  if (!last_fwd && fwd) return last_color < color;
  return true;
}

std::map<Mask, std::vector<Move>> lp_adjacency(const LPGraph& g) {
  std::map<Mask, std::vector<Move>> adj;
  for (const Edge& e : g.edges) {
    adj[e.tail].push_back({e.head(), e.color, true});
    adj[e.head()].push_back({e.tail, e.color, false});
  }
  return adj;
}

}  // namespace

std::vector<Mask> LegalPath::critical() const {
  std::vector<Mask> out;
  if (vertices.empty()) return out;
  out.push_back(vertices.front());
  for (std::size_t q = 1; q + 1 < vertices.size(); ++q)
    if (forward[q - 1] && forward[q]) out.push_back(vertices[q]);
  if (vertices.size() > 1) out.push_back(vertices.back());
  return out;
}

std::vector<Mask> LegalPath::vee() const {
  std::vector<Mask> out;
  for (std::size_t q = 1; q + 1 < vertices.size(); ++q)
    if (!forward[q - 1] && forward[q]) out.push_back(vertices[q]);
  return out;
}

std::vector<Mask> LegalPath::wedge() const {
  std::vector<Mask> out;
  for (std::size_t q = 1; q + 1 < vertices.size(); ++q)
    if (forward[q - 1] && !forward[q]) out.push_back(vertices[q]);
  return out;
}

LegalPath make_path(int n, std::vector<Mask> vertices) {
  LegalPath p;
  p.n = n;
  for (std::size_t q = 0; q + 1 < vertices.size(); ++q) {
    Mask d = vertices[q] ^ vertices[q + 1];
    if (card(d) != 1 || (d & ~full_set(n))) throw Error("not-a-walk", "consecutive vertices differ in more than one element");
    p.colors.push_back(min_elem(d));
    p.forward.push_back((vertices[q + 1] & d) != 0);
  }
  p.vertices = std::move(vertices);
  return p;
}

Contraction contract(const GTiling& t) {
  int n = t.n();
  if (n < 2) throw Error("bad-n", "contraction needs n >= 2");
  Strip s = strip(t, n);
  std::vector<Mask> vs(s.right.rbegin(), s.right.rend());
  std::vector<Tile> tiles;
  for (Tile tl : t.tiles()) {
    if (tl.j == n) continue;
    tl.x &= ~bit(n);
    tiles.push_back(tl);
  }
  Contraction c{GTiling(n - 1, std::move(tiles)), make_path(n - 1, std::move(vs))};
  require_valid(c.tiling);
  auto v = legal_violations(c.tiling, c.path);
  if (!v.empty()) throw Error("internal", "contracted path is not legal: " + v.front());
  return c;
}

std::vector<std::string> legal_violations(const GTiling& host, const LegalPath& p) {
  std::vector<std::string> out;
  int n = host.n();
  if (p.n != n) return {"path ground size differs from the tiling"};
  if (p.vertices.size() < 2 || p.colors.size() + 1 != p.vertices.size() || p.forward.size() != p.colors.size())
    return {"path arrays have inconsistent lengths"};
  if (p.vertices.front() != 0) out.push_back("path does not start at the empty set");
  if (p.vertices.back() != full_set(n)) out.push_back("path does not end at [n]");
  TGraph g = build_graph(host);
  std::set<Mask> seen;
  for (std::size_t q = 0; q < p.vertices.size(); ++q) {
    Mask v = p.vertices[q];
    if (!seen.insert(v).second) out.push_back("path revisits " + to_string(v, n));
    if (!g.has_vertex(v)) out.push_back(to_string(v, n) + " is not a vertex of the tiling");
    else if (g.terminal(v)) out.push_back("path meets terminal vertex " + to_string(v, n));
  }
  for (std::size_t q = 0; q < p.colors.size(); ++q) {
    int c = p.colors[q];
    Mask a = p.vertices[q], b = p.vertices[q + 1];
    if (c < 1 || c > n || (a ^ b) != bit(c) || p.forward[q] != has(b, c)) {
      out.push_back("step " + std::to_string(q) + " does not match its colour and direction");
      continue;
    }
    if (!g.has_edge(std::min(a, b), c)) out.push_back("step " + std::to_string(q) + " is not an edge of the tiling");
    if (q == 0) continue;
    bool pf = p.forward[q - 1], f = p.forward[q];
    int pc = p.colors[q - 1];
    if (!pf && !f) out.push_back("two consecutive backward edges at " + to_string(a, n));
    if (pf && !f && !(pc > c)) out.push_back("forward then backward needs a colour drop at " + to_string(a, n));
    if (!pf && f && !(pc < c)) out.push_back("backward then forward needs a colour rise at " + to_string(a, n));
  }
  if (!out.empty()) return out;
  auto cr = p.critical();
  bool levels = static_cast<int>(cr.size()) == n + 1;
  for (std::size_t h = 0; levels && h < cr.size(); ++h) levels = card(cr[h]) == static_cast<int>(h);
  if (!levels) out.push_back("critical vertices are not one per level");
  return out;
}

bool is_legal(const GTiling& host, const LegalPath& p) { return legal_violations(host, p).empty(); }

GTiling expand(const GTiling& host, const LegalPath& p) {
  auto v = legal_violations(host, p);
  if (!v.empty()) throw Error("illegal-path", v.front());
  int n = host.n();
  int nn = n + 1;
  const auto& ts = host.tiles();
  TGraph g = build_graph(host);

  std::set<Edge> on_path;
  for (std::size_t q = 0; q < p.colors.size(); ++q) on_path.insert(path_edge(p, q));

  Dsu dsu(ts.size());
  for (const auto& [e, idxs] : g.edge_tiles)
    if (!on_path.count(e))
      for (std::size_t k = 1; k < idxs.size(); ++k) dsu.join(idxs[0], idxs[k]);

  std::vector<int> side(ts.size(), 0);  // 1 left, 2 right
  auto seed = [&](int idx, int s) {
    int r = dsu.find(idx);
    if (side[r] && side[r] != s) throw Error("illegal-path", "path does not separate the tiling");
    side[r] = s;
  };
  auto in_right_boundary = [](const Tile& tl, const Edge& e) {
    return e == Edge{tl.x, tl.j} || e == Edge{tl.x | bit(tl.j), tl.i};
  };
  for (std::size_t q = 0; q < p.colors.size(); ++q) {
    auto it = g.edge_tiles.find(path_edge(p, q));
    if (it == g.edge_tiles.end()) continue;
    const Edge& e = it->first;
    for (int idx : it->second) {
      bool right_bd = in_right_boundary(ts[idx], e);
      // Walking up an edge, the tile having it on its right boundary lies to the left.
      seed(idx, right_bd == p.forward[q] ? 1 : 2);
    }
  }
  for (int h = 1; h <= n; ++h) {
    Edge l{left_boundary_vertex(h - 1), h}, r = right_boundary_edge(h, n);
    if (!on_path.count(l) && g.edge_tiles.count(l))
      for (int idx : g.edge_tiles.at(l)) seed(idx, 1);
    if (!on_path.count(r) && g.edge_tiles.count(r))
      for (int idx : g.edge_tiles.at(r)) seed(idx, 2);
  }

  std::vector<Tile> out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    int s = side[dsu.find(static_cast<int>(k))];
    if (!s) throw Error("illegal-path", "tile " + to_string(ts[k], n) + " is cut off from both boundaries");
    Tile tl = ts[k];
    if (s == 2) tl.x |= bit(nn);
    out.push_back(tl);
  }
  for (std::size_t q = 0; q < p.colors.size(); ++q) {
    Edge e = path_edge(p, q);
    out.push_back({e.tail, e.color, nn, !p.forward[q]});
  }
  GTiling t(nn, std::move(out));
  auto bad = validate(t);
  if (!bad.empty()) throw Error("illegal-path", "expansion fails " + bad.front().rule + ": " + bad.front().detail);
  return t;
}

std::vector<HLevel> h_forests(const GTiling& t) {
  int n = t.n();
  TGraph g = build_graph(t);
  std::vector<HLevel> out;
  for (int h = 1; h <= n; ++h) {
    HLevel lv;
    lv.h = h;
    std::vector<Edge> es;
    std::map<Mask, int> idx;
    std::vector<Mask> vs;
    for (const auto& [e, black] : g.edges) {
      if (black || card(e.tail) != h - 1) continue;
      es.push_back(e);
      for (Mask v : {e.tail, e.head()})
        if (idx.emplace(v, static_cast<int>(vs.size())).second) vs.push_back(v);
    }
    Dsu dsu(vs.size());
    for (const Edge& e : es) dsu.join(idx[e.tail], idx[e.head()]);
    std::map<int, int> comp_of;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      int r = dsu.find(static_cast<int>(k));
      auto [it, fresh] = comp_of.emplace(r, static_cast<int>(lv.components.size()));
      if (fresh) lv.components.push_back({});
      lv.components[it->second].vertices.push_back(vs[k]);
    }
    for (const Edge& e : es) lv.components[comp_of[dsu.find(idx[e.tail])]].edges.push_back(e);

    Edge lb{left_boundary_vertex(h - 1), h}, rb = right_boundary_edge(h, n);
    std::string at = "level " + std::to_string(h) + ": ";
    for (std::size_t c = 0; c < lv.components.size(); ++c) {
      HComponent& k = lv.components[c];
      std::sort(k.vertices.begin(), k.vertices.end(), canonical_less);
      if (k.edges.size() + 1 != k.vertices.size()) lv.problems.push_back(at + "component has a cycle");
      std::vector<Mask> term;
      for (Mask v : k.vertices)
        if (g.terminal(v)) term.push_back(v);
      bool has_lb = std::find(k.edges.begin(), k.edges.end(), lb) != k.edges.end();
      bool has_rb = std::find(k.edges.begin(), k.edges.end(), rb) != k.edges.end();
      if (has_lb && has_rb && term.empty()) {
        k.principal = true;
        if (lv.principal >= 0) lv.problems.push_back(at + "two principal components");
        lv.principal = static_cast<int>(c);
      } else if (term.size() != 1) {
        lv.problems.push_back(at + "non-principal component without a single terminal vertex");
      } else {
        k.center = term[0];
        for (const Edge& e : k.edges)
          if (e.tail != k.center && e.head() != k.center) lv.problems.push_back(at + "component is not a star");
      }
    }
    if (lv.principal < 0) lv.problems.push_back(at + "no principal component");
    std::map<Mask, std::vector<Edge>> inc;
    for (const Edge& e : es) {
      inc[e.tail].push_back(e);
      inc[e.head()].push_back(e);
    }
    for (const Edge& e2 : es)
      for (const Edge& e1 : inc[e2.tail])
        for (const Edge& e3 : inc[e2.head()]) {
          if (e1 == e2 || e3 == e2) continue;
          bool low = e1.color < e2.color && e3.color < e2.color;
          bool high = e1.color > e2.color && e3.color > e2.color;
          if (!low && !high) lv.problems.push_back(at + "3-edge path crosses itself");
        }
    out.push_back(std::move(lv));
  }
  return out;
}

LPGraph lp_graph(const GTiling& t) {
  LPGraph g;
  g.n = t.n();
  for (const HLevel& lv : h_forests(t)) {
    if (lv.principal < 0) throw Error("invalid-tiling", lv.problems.front());
    const HComponent& k = lv.components[lv.principal];
    g.edges.insert(k.edges.begin(), k.edges.end());
  }
  Mask lo = 0, hi = full_set(g.n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Mask, int> deg;
    for (const Edge& e : g.edges) {
      ++deg[e.tail];
      ++deg[e.head()];
    }
    for (auto it = g.edges.begin(); it != g.edges.end();) {
      bool leaf = (deg[it->tail] == 1 && it->tail != lo && it->tail != hi) ||
                  (deg[it->head()] == 1 && it->head() != lo && it->head() != hi);
      if (leaf) {
        it = g.edges.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  for (const Edge& e : g.edges) {
    g.vertices.insert(e.tail);
    g.vertices.insert(e.head());
  }
  return g;
}

void for_each_legal_path(const GTiling& t, const std::function<void(const LegalPath&)>& f) {
  LPGraph g = lp_graph(t);
  auto adj = lp_adjacency(g);
  Mask target = full_set(t.n());
  LegalPath cur;
  cur.n = t.n();
  cur.vertices = {0};
  std::set<Mask> on{0};
  std::function<void()> go = [&]() {
    Mask v = cur.vertices.back();
    if (v == target) {
      f(cur);
      return;
    }
    bool have = !cur.colors.empty();
    for (const Move& m : adj[v]) {
      if (on.count(m.to)) continue;
      if (!step_ok(have, have && cur.forward.back(), have ? cur.colors.back() : 0, m.forward, m.color)) continue;
      cur.vertices.push_back(m.to);
      cur.colors.push_back(m.color);
      cur.forward.push_back(m.forward);
      on.insert(m.to);
      go();
      on.erase(m.to);
      cur.vertices.pop_back();
      cur.colors.pop_back();
      cur.forward.pop_back();
    }
  };
  go();
}

std::vector<LegalPath> legal_paths(const GTiling& t) {
  std::vector<LegalPath> out;
  for_each_legal_path(t, [&](const LegalPath& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_legal_paths(const GTiling& t) {
  LPGraph g = lp_graph(t);
  auto adj = lp_adjacency(g);
  Mask target = full_set(t.n());
  // A legal walk cannot undo its last edge or drop two levels, so it never repeats a
  // vertex and the count depends only on the vertex and the last step.
  std::map<std::tuple<Mask, bool, bool, int>, std::uint64_t> memo;
  std::function<std::uint64_t(Mask, bool, bool, int)> count = [&](Mask v, bool have, bool fwd, int c) -> std::uint64_t {
    if (v == target) return 1;
    auto key = std::make_tuple(v, have, fwd, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const Move& m : adj[v])
      if (step_ok(have, fwd, c, m.forward, m.color)) total += count(m.to, true, m.forward, m.color);
    memo[key] = total;
    return total;
  };
  return count(0, false, false, 0);
}

LegalPath legal_path_from_separator(const GTiling& t, const SeparatorChain& s) {
  int n = t.n();
  if (static_cast<int>(s.size()) != n + 1) throw Error("bad-separator", "chain needs n+1 members");
  for (int h = 0; h <= n; ++h)
    if (card(s[h]) != h || (s[h] & ~full_set(n))) throw Error("bad-separator", "chain member has the wrong size");
  for (int h = 1; h <= n; ++h)
    if (!prec(s[h - 1], s[h])) throw Error("bad-separator", "chain is not increasing under the order");
  auto levels = h_forests(t);
  std::vector<Mask> vs{s[0]};
  for (int h = 1; h <= n; ++h) {
    const HLevel& lv = levels[h - 1];
    if (lv.principal < 0) throw Error("invalid-tiling", lv.problems.front());
    const HComponent& k = lv.components[lv.principal];
    auto in_k = [&](Mask v) { return std::binary_search(k.vertices.begin(), k.vertices.end(), v, canonical_less); };
    if (!in_k(s[h - 1]) || !in_k(s[h]))
      throw Error("separator-outside-principal", "level " + std::to_string(h) + " separator vertex is off the principal tree");
    std::map<Mask, std::vector<Mask>> adj;
    for (const Edge& e : k.edges) {
      adj[e.tail].push_back(e.head());
      adj[e.head()].push_back(e.tail);
    }
    std::map<Mask, Mask> parent{{s[h - 1], s[h - 1]}};
    std::queue<Mask> q;
    q.push(s[h - 1]);
    while (!q.empty()) {
      Mask v = q.front();
      q.pop();
      for (Mask w : adj[v])
        if (parent.emplace(w, v).second) q.push(w);
    }
    std::vector<Mask> seg;
    for (Mask v = s[h]; v != s[h - 1]; v = parent.at(v)) seg.push_back(v);
    vs.insert(vs.end(), seg.rbegin(), seg.rend());
  }
  LegalPath p = make_path(n, std::move(vs));
  auto v = legal_violations(t, p);
  if (!v.empty()) throw Error("separator-outside-principal", "tree path is not legal: " + v.front());
  if (p.critical() != s) throw Error("separator-outside-principal", "critical vertices differ from the separator");
  return p;
}

GTiling tiling_from_ws(const Collection& c) {
  int n = c.n();
  if (n < 1 || !is_largest_ws(c)) throw Error("not-largest-ws", "input is not a largest weakly separated collection");
  if (n == 1) return GTiling(1, {});
  if (n == 2) return GTiling(2, {Tile{0, 1, 2, false}});
  Projection pr = project(c);
  SeparatorChain s = separator(c);
  GTiling sub = tiling_from_ws(pr.cprime);
  GTiling t = expand(sub, legal_path_from_separator(sub, s));
  if (!(spectrum(t) == c)) throw Error("internal", "constructed tiling has the wrong spectrum");
  return t;
}

}  // namespace wsep
