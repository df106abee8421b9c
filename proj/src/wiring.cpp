#include "wsep/wiring.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>

namespace wsep {

namespace {

// Rotation system of the wiring inside Z: crossings, the wire ends s_i, s'_i,
// and the corners p_q, p'_q of the boundary. Darts 2e / 2e+1 run along / against edge e.
class Map {
 public:
  struct E {
    int from, to, wire;
  };

  explicit Map(const Wiring& w) : w_(w), n_(w.n), c_(static_cast<int>(w.crossings.size())) {
    int nodes = c_ + 3 * n_ + 1 + std::max(0, n_ - 1);
    rot_.assign(nodes, {});
    in_.assign(c_, {-1, -1});
    out_.assign(c_, {-1, -1});
    first_.assign(n_ + 1, -1);
    last_.assign(n_ + 1, -1);
    for (int i = 1; i <= n_; ++i) {
      std::vector<int> seq{s(i)};
      for (int id : w.wires[i - 1]) seq.push_back(id);
      seq.push_back(sp(i));
      for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
        int e = add(seq[t], seq[t + 1], i);
        if (t == 0) first_[i] = e;
        if (t + 2 == seq.size()) last_[i] = e;
      }
      for (std::size_t t = 1; t + 1 < seq.size(); ++t) {
        int id = seq[t];
        slot(in_, id, i) = first_[i] + static_cast<int>(t) - 1;
        slot(out_, id, i) = first_[i] + static_cast<int>(t);
      }
    }
    for (int q = 1; q <= n_; ++q) {
      a_.push_back(add(p(q - 1), s(q), 0));
      b_.push_back(add(s(q), p(q), 0));
      cc_.push_back(add(pp(q - 1), sp(q), 0));
      d_.push_back(add(sp(q), pp(q), 0));
    }
    for (int id = 0; id < c_; ++id) {
      const Crossing& x = w.crossings[id];
      int ei = 2 * in_[id][0] + 1, ej = 2 * in_[id][1] + 1;
      int fi = 2 * out_[id][0], fj = 2 * out_[id][1];
      rot_[id] = x.black ? std::vector<int>{ei, fj, fi, ej} : std::vector<int>{ei, ej, fi, fj};
    }
    for (int q = 1; q <= n_; ++q) {
      rot_[s(q)] = {2 * b_[q - 1], 2 * first_[q], 2 * a_[q - 1] + 1};
      rot_[sp(q)] = {2 * cc_[q - 1] + 1, 2 * d_[q - 1], 2 * last_[q] + 1};
    }
    for (int q = 0; q <= n_; ++q) {
      std::vector<int>& r = rot_[p(q)];
      if (q >= 1) r.push_back(2 * b_[q - 1] + 1);
      if (q + 1 <= n_) r.push_back(2 * a_[q]);
    }
    rot_[p(n_)].push_back(2 * cc_[0]);
    rot_[p(0)].push_back(2 * d_[n_ - 1] + 1);
    for (int q = 1; q < n_; ++q) rot_[pp(q)] = {2 * d_[q - 1] + 1, 2 * cc_[q]};

    pos_.assign(2 * edges_.size(), -1);
    for (auto& r : rot_)
      for (std::size_t k = 0; k < r.size(); ++k) pos_[r[k]] = static_cast<int>(k);

    face_.assign(2 * edges_.size(), -1);
    for (int d = 0; d < static_cast<int>(face_.size()); ++d) {
      if (face_[d] >= 0) continue;
      int f = static_cast<int>(walks_.size());
      walks_.push_back({});
      int cur = d;
      while (face_[cur] < 0) {
        face_[cur] = f;
        walks_[f].push_back(cur);
        cur = next(cur);
      }
    }
    outer_ = face_[2 * a_[0]];
  }

  int s(int i) const { return c_ + i - 1; }
  int sp(int i) const { return c_ + n_ + i - 1; }
  int p(int q) const { return c_ + 2 * n_ + q; }
  int pp(int q) const {
    if (q == 0) return p(n_);
    if (q == n_) return p(0);
    return c_ + 3 * n_ + 1 + (q - 1);
  }
  int tail(int d) const { return d % 2 ? edges_[d / 2].to : edges_[d / 2].from; }
  int head(int d) const { return d % 2 ? edges_[d / 2].from : edges_[d / 2].to; }
  int wire(int d) const { return edges_[d / 2].wire; }
  bool along(int d) const { return d % 2 == 0; }
  int next(int d) const {
    int r = d ^ 1;
    const auto& ro = rot_[tail(r)];
    return ro[(pos_[r] + 1) % ro.size()];
  }

  int node_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(walks_.size()); }
  int outer() const { return outer_; }
  int face(int d) const { return face_[d]; }
  const std::vector<int>& walk(int f) const { return walks_[f]; }
  int in_dart(int id, int slot) const { return 2 * in_[id][slot]; }
  int out_dart(int id, int slot) const { return 2 * out_[id][slot]; }
  // Inner-face darts anchored at the boundary corners.
  int left_corner_dart(int q) const { return q == 0 ? 2 * a_[0] + 1 : 2 * b_[q - 1] + 1; }
  int right_corner_dart(int q) const { return q == 0 ? 2 * cc_[0] + 1 : 2 * d_[q - 1] + 1; }
  std::vector<int> out_darts(int id) const { return rot_[id]; }

 private:
  int add(int from, int to, int wire) {
    edges_.push_back({from, to, wire});
    return static_cast<int>(edges_.size()) - 1;
  }
  int& slot(std::vector<std::array<int, 2>>& v, int id, int wire) {
    const Crossing& x = w_.crossings[id];
    return v[id][wire == x.i ? 0 : 1];
  }

  const Wiring& w_;
  int n_, c_;
  std::vector<E> edges_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_, face_;
  std::vector<std::vector<int>> walks_;
  std::vector<std::array<int, 2>> in_, out_;
  std::vector<int> first_, last_, a_, b_, cc_, d_;
  int outer_ = -1;
};

std::vector<Violation> structural(const Wiring& w) {
  std::vector<Violation> out;
  int n = w.n;
  if (n < 1 || n > kMaxN || static_cast<int>(w.wires.size()) != n) {
    out.push_back({"structure", "wire count does not match n"});
    return out;
  }
  int c = static_cast<int>(w.crossings.size());
  for (int id = 0; id < c; ++id) {
    const Crossing& x = w.crossings[id];
    if (x.id != id) out.push_back({"structure", "crossing ids must be 0..C-1 in order"});
    if (!(1 <= x.i && x.i < x.j && x.j <= n)) out.push_back({"structure", "crossing " + std::to_string(id) + " has bad wires"});
  }
  if (!out.empty()) return out;
  std::vector<std::array<int, 2>> seen(c, {0, 0});
  for (int i = 1; i <= n; ++i)
    for (int id : w.wires[i - 1]) {
      if (id < 0 || id >= c) {
        out.push_back({"structure", "wire " + std::to_string(i) + " lists unknown crossing"});
        continue;
      }
      const Crossing& x = w.crossings[id];
      if (x.i == i) ++seen[id][0];
      else if (x.j == i) ++seen[id][1];
      else out.push_back({"structure", "crossing " + std::to_string(id) + " listed on foreign wire " + std::to_string(i)});
    }
  for (int id = 0; id < c; ++id)
    if (seen[id][0] != 1 || seen[id][1] != 1)
      out.push_back({"structure", "crossing " + std::to_string(id) + " is not threaded once on each wire"});
  return out;
}

// Shared crossings of wires i < j in the order of w_i (then of w_j).
std::vector<int> shared(const Wiring& w, int wire, int other) {
  std::vector<int> v;
  for (int id : w.wires[wire - 1]) {
    const Crossing& x = w.crossings[id];
    if (x.i == other || x.j == other) v.push_back(id);
  }
  return v;
}

struct Labelled {
  std::vector<Mask> label;  // per face
  std::vector<Violation> problems;
};

Labelled label_faces(const Wiring& w, const Map& m) {
  Labelled res;
  int nf = m.face_count();
  res.label.assign(nf, 0);
  std::vector<char> done(nf, 0);
  int start = m.face(m.left_corner_dart(0));
  done[start] = 1;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int d : m.walk(f)) {
      int i = m.wire(d);
      if (i == 0) continue;
      bool in_f = has(res.label[f], i);
      if (in_f != m.along(d)) {
        res.problems.push_back({"labels", "wire " + std::to_string(i) + " toggle is inconsistent"});
        continue;
      }
      int g = m.face(d ^ 1);
      Mask lg = res.label[f] ^ bit(i);
      if (!done[g]) {
        done[g] = 1;
        res.label[g] = lg;
        q.push(g);
      } else if (res.label[g] != lg) {
        res.problems.push_back({"labels", "face label disagrees across wire " + std::to_string(i)});
      }
    }
  }
  for (int f = 0; f < nf; ++f)
    if (!done[f] && f != m.outer()) res.problems.push_back({"labels", "face unreachable from the boundary"});
  int n = w.n;
  for (int q = 0; q <= n; ++q) {
    if (res.label[m.face(m.left_corner_dart(q))] != left_boundary_vertex(q))
      res.problems.push_back({"labels", "face at p_" + std::to_string(q) + " is not [" + std::to_string(q) + "]"});
    if (res.label[m.face(m.right_corner_dart(q))] != right_boundary_vertex(q, n))
      res.problems.push_back({"labels", "face at p'_" + std::to_string(q) + " is not a suffix interval"});
  }
  return res;
}

bool face_touches_boundary(const Map& m, int f) {
  for (int d : m.walk(f))
    if (m.wire(d) == 0) return true;
  return false;
}

bool face_cyclic(const Map& m, int f) {
  const auto& wk = m.walk(f);
  if (face_touches_boundary(m, f)) return false;
  bool first = m.along(wk.front());
  return std::all_of(wk.begin(), wk.end(), [&](int d) { return m.along(d) == first; });
}

}  // namespace

std::vector<Violation> validate_wiring(const Wiring& w) {
  auto out = structural(w);
  if (!out.empty()) return out;
  int n = w.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto a = shared(w, i, j), b = shared(w, j, i);
      std::string pair = std::to_string(i) + "," + std::to_string(j);
      if (a.size() % 2 == 0) out.push_back({"W1", "wires " + pair + " meet an even number of times"});
      std::reverse(b.begin(), b.end());
      if (a != b) out.push_back({"W2", "common points of wires " + pair + " are not in opposed orders"});
      for (std::size_t q = 0; q < a.size(); ++q)
        if (w.crossings[a[q]].black != ((q + 1) % 2 == 0))
          out.push_back({"colour", "crossing " + std::to_string(a[q]) + " colour does not match its position"});
    }
  if (!out.empty()) return out;

  Map m(w);
  if (m.node_count() - m.edge_count() + m.face_count() != 2)
    out.push_back({"Euler", "face tracing does not close up as a disc"});
  auto lab = label_faces(w, m);
  out.insert(out.end(), lab.problems.begin(), lab.problems.end());
  if (!out.empty()) return out;

  std::set<int> cyclic, images;
  for (int f = 0; f < m.face_count(); ++f)
    if (f != m.outer() && face_cyclic(m, f)) cyclic.insert(f);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto a = shared(w, i, j);
      auto posi = [&](int wire, int id) {
        const auto& l = w.wires[wire - 1];
        return static_cast<int>(std::find(l.begin(), l.end(), id) - l.begin());
      };
      for (std::size_t q = 1; q < a.size(); ++q) {
        int upper = a[q - 1], lower = a[q];
        std::string lens = "lens L_" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(q) + ")";
        int f;
        // The black end of the lens is its root; pick the sector facing into the lens.
        if (q % 2 == 0) f = m.face(m.in_dart(upper, 1) ^ 1);
        else f = m.face(m.out_dart(lower, 1));
        if (!cyclic.count(f)) out.push_back({"W3", lens + " has no cyclic face at its root"});
        else if (!images.insert(f).second) out.push_back({"W3", lens + " shares its cyclic face"});
        bool adj_i = posi(i, lower) - posi(i, upper) == 1;
        bool adj_j = posi(j, upper) - posi(j, lower) == 1;
        if (adj_i && adj_j) out.push_back({"proper", lens + " is a whole face"});
      }
    }
  if (images.size() != cyclic.size()) out.push_back({"W3", "some cyclic face is not attached to a lens"});

  std::set<Mask> labels;
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer()) continue;
    if (!labels.insert(lab.label[f]).second)
      out.push_back({"nocopies", "label " + to_string(lab.label[f], n) + " repeats"});
    std::set<int> ws;
    for (int d : m.walk(f))
      if (m.wire(d) && !ws.insert(m.wire(d)).second)
        out.push_back({"nocopies", "face " + to_string(lab.label[f], n) + " meets wire " + std::to_string(m.wire(d)) + " twice"});
  }
  return out;
}

std::vector<WFace> faces(const Wiring& w) {
  auto st = structural(w);
  if (!st.empty()) throw Error("bad-wiring", st.front().detail);
  Map m(w);
  auto lab = label_faces(w, m);
  if (!lab.problems.empty()) throw Error("label-inconsistency", lab.problems.front().detail);
  std::vector<WFace> out;
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer()) continue;
    WFace face;
    face.label = lab.label[f];
    face.cyclic = face_cyclic(m, f);
    face.touches_boundary = face_touches_boundary(m, f);
    for (int d : m.walk(f)) face.walk.push_back({m.wire(d), m.tail(d), m.head(d), m.along(d)});
    out.push_back(std::move(face));
  }
  return out;
}

Collection spectrum(const Wiring& w) {
  std::vector<Mask> v;
  for (const auto& f : faces(w))
    if (!f.cyclic) v.push_back(f.label);
  Collection c(w.n, std::move(v));
  if (static_cast<long long>(c.size()) != largest_ws_size(w.n))
    throw Error("bad-spectrum", "wiring spectrum has " + std::to_string(c.size()) + " members");
  return c;
}

Collection full_spectrum(const Wiring& w) {
  std::vector<Mask> v;
  for (const auto& f : faces(w)) v.push_back(f.label);
  return Collection(w.n, std::move(v));
}

std::size_t cyclic_face_count(const Wiring& w) {
  auto fs = faces(w);
  return static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [](const WFace& f) { return f.cyclic; }));
}

Wiring tiling_to_wiring(const GTiling& t) {
  require_valid(t);
  Wiring w;
  w.n = t.n();
  const auto& ts = t.tiles();
  for (int id = 0; id < static_cast<int>(ts.size()); ++id) w.crossings.push_back({id, ts[id].i, ts[id].j, ts[id].black});
  for (int c = 1; c <= t.n(); ++c) {
    Strip s = strip(t, c);
    std::vector<int> ids;
    for (const Tile& tl : s.tiles)
      ids.push_back(static_cast<int>(std::lower_bound(ts.begin(), ts.end(), tl) - ts.begin()));
    w.wires.push_back(std::move(ids));
  }
  return w;
}

GTiling wiring_to_tiling(const Wiring& w) {
  auto v = validate_wiring(w);
  if (!v.empty()) throw Error("not-proper", v.front().rule + " " + v.front().detail);
  Map m(w);
  auto lab = label_faces(w, m);
  std::vector<Tile> tiles;
  for (const Crossing& x : w.crossings) {
    std::vector<Mask> ls;
    for (int d : m.out_darts(x.id)) ls.push_back(lab.label[m.face(d)]);
    Mask lo = *std::min_element(ls.begin(), ls.end(), canonical_less);
    std::vector<Mask> want{lo, lo | bit(x.i), lo | bit(x.j), lo | bit(x.i) | bit(x.j)};
    std::sort(ls.begin(), ls.end());
    std::sort(want.begin(), want.end());
    if (ls != want || (lo & (bit(x.i) | bit(x.j))))
      throw Error("not-proper", "faces around crossing " + std::to_string(x.id) + " do not form a tile");
    tiles.push_back({lo, x.i, x.j, x.black});
  }
  GTiling t(w.n, std::move(tiles));
  require_valid(t);
  return t;
}

Wiring remove_wire(const Wiring& w, int i) {
  if (i < 1 || i > w.n) throw Error("bad-wire", "no wire " + std::to_string(i));
  Wiring out;
  out.n = w.n - 1;
  std::vector<int> remap(w.crossings.size(), -1);
  auto relabel = [i](int c) { return c > i ? c - 1 : c; };
  for (const Crossing& x : w.crossings) {
    if (x.i == i || x.j == i) continue;
    remap[x.id] = static_cast<int>(out.crossings.size());
    out.crossings.push_back({remap[x.id], relabel(x.i), relabel(x.j), x.black});
  }
  for (int c = 1; c <= w.n; ++c) {
    if (c == i) continue;
    std::vector<int> ids;
    for (int id : w.wires[c - 1])
      if (remap[id] >= 0) ids.push_back(remap[id]);
    out.wires.push_back(std::move(ids));
  }
  return out;
}

}  // namespace wsep
