#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wsep/sets.hpp"

namespace wsep {

// tau(X;i,j) with corners b = X, l = Xi, r = Xj, t = Xij.
struct Tile {
  Mask x = 0;
  int i = 0, j = 0;
  bool black = false;

  Mask b() const { return x; }
  Mask l() const { return x | bit(i); }
  Mask r() const { return x | bit(j); }
  Mask t() const { return x | bit(i) | bit(j); }
  bool same_place(const Tile& o) const { return x == o.x && i == o.i && j == o.j; }
  auto operator<=>(const Tile&) const = default;
};

// The edge (tail, tail + color).
struct Edge {
  Mask tail = 0;
  int color = 0;

  Mask head() const { return tail | bit(color); }
  auto operator<=>(const Edge&) const = default;
};

std::vector<Edge> tile_edges(const Tile& t);
std::string to_string(const Tile& t, int n);

class GTiling {
 public:
  GTiling() = default;
  GTiling(int n, std::vector<Tile> tiles);

  int n() const { return n_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  std::size_t black_count() const;
  // Finds the tile at (x,i,j) regardless of colour.
  const Tile* find(Mask x, int i, int j) const;

  friend bool operator==(const GTiling&, const GTiling&) = default;
  friend bool operator<(const GTiling& a, const GTiling& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.tiles_ < b.tiles_;
  }

 private:
  int n_ = 0;
  std::vector<Tile> tiles_;  // sorted by (x, i, j, black)
};

struct Violation {
  std::string rule;
  std::string detail;
};

std::vector<Violation> validate(const GTiling& t);
void require_valid(const GTiling& t);

// Left boundary vertex p_q = [q] and right boundary vertex p'_q = [q+1..n].
inline Mask left_boundary_vertex(int q) { return interval(1, q); }
inline Mask right_boundary_vertex(int q, int n) { return interval(q + 1, n); }
bool is_boundary_edge(const Edge& e, int n);

enum class VertexClass { Ordinary, Mixed, TerminalBottom, TerminalTop };

struct TGraph {
  int n = 0;
  std::vector<Mask> vertices;            // canonical order
  std::map<Mask, VertexClass> klass;
  std::map<Edge, bool> edges;            // value: black
  std::map<Edge, std::vector<int>> edge_tiles;
  std::map<Mask, std::vector<int>> vertex_tiles;

  bool has_vertex(Mask v) const { return klass.count(v) != 0; }
  bool has_edge(Mask tail, int c) const { return edges.count({tail, c}) != 0; }
  bool terminal(Mask v) const;
  std::vector<int> in_colors(Mask v) const;   // descending
  std::vector<int> out_colors(Mask v) const;  // descending
};

// Incidence data only; no axiom checks.
TGraph build_graph(const GTiling& t);
// Validates, classifies, and checks the local structure around every vertex.
TGraph classify_vertices(const GTiling& t);

Collection spectrum(const GTiling& t);
Collection full_spectrum(const GTiling& t);

struct Strip {
  int color = 0;
  std::vector<Edge> edges;         // e_0..e_r
  std::vector<Tile> tiles;         // tau_1..tau_r
  std::vector<Mask> right;         // R_Q: tails of e_p
  std::vector<Mask> left;          // L_Q: heads of e_p
  std::vector<int> link_colors;    // colour of a_p, p = 1..r
  std::vector<bool> right_forward; // a_p directed v_{p-1} -> v_p
};

Strip strip(const GTiling& t, int color);

struct Config {
  enum Kind { W, M };
  Kind kind = W;
  Mask x = 0;
  int i = 0, j = 0, k = 0;

  std::vector<Mask> vertices() const;
  int height() const { return card(x) + 2; }
  friend bool operator==(const Config&, const Config&) = default;
};

std::vector<Config> find_configs(const GTiling& t, Config::Kind kind, bool feasible_only);

enum class FlipCase { OneA, OneB, TwoA, TwoB };
FlipCase lowering_case(const GTiling& t, const Config& c);
GTiling lowering_flip(const GTiling& t, const Config& c);
GTiling raising_flip(const GTiling& t, const Config& c);
GTiling reverse(const GTiling& t);

// Local tile pattern at a vertex given its incident edges and the black tiles
// touching it as a side vertex; shared by reconstruction and classification.
std::vector<Tile> local_tiles(int n, Mask v, const std::vector<int>& in_desc,
                              const std::vector<int>& out_desc, const std::vector<Tile>& black_side,
                              VertexClass cls);

GTiling from_spectrum(const Collection& b);
GTiling standard_tiling(int n);
std::vector<Config> descend(const GTiling& t);

}  // namespace wsep
