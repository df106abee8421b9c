#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wsep/gtiling.hpp"
#include "wsep/sets.hpp"

namespace wsep {

// A path from the empty set to [n] in the graph of a tiling over n. Edge q joins
// vertices[q] and vertices[q+1] with colour colors[q]; forward means it goes up.
struct LegalPath {
  int n = 0;
  std::vector<Mask> vertices;
  std::vector<int> colors;
  std::vector<bool> forward;

  // Endpoints plus every vertex entered and left by forward edges.
  std::vector<Mask> critical() const;
  std::vector<Mask> vee() const;    // both path edges leave the vertex
  std::vector<Mask> wedge() const;  // both path edges enter the vertex

  friend bool operator==(const LegalPath&, const LegalPath&) = default;
  friend auto operator<=>(const LegalPath& a, const LegalPath& b) { return a.vertices <=> b.vertices; }
};

// Fills colors/forward from a vertex walk; throws "not-a-walk" if steps are not edges of the cube.
LegalPath make_path(int n, std::vector<Mask> vertices);

struct Contraction {
  GTiling tiling;
  LegalPath path;
};

Contraction contract(const GTiling& t);

std::vector<std::string> legal_violations(const GTiling& host, const LegalPath& p);
bool is_legal(const GTiling& host, const LegalPath& p);
GTiling expand(const GTiling& host, const LegalPath& p);

struct HComponent {
  std::vector<Mask> vertices;
  std::vector<Edge> edges;
  bool principal = false;
  Mask center = 0;  // the terminal vertex of a star
};

struct HLevel {
  int h = 0;
  std::vector<HComponent> components;
  int principal = -1;
  std::vector<std::string> problems;
};

// Components of the white edges between levels h-1 and h, h = 1..n, with the forest,
// principal component, star and zigzag checks recorded in problems.
std::vector<HLevel> h_forests(const GTiling& t);

struct LPGraph {
  int n = 0;
  std::set<Mask> vertices;
  std::set<Edge> edges;
};

LPGraph lp_graph(const GTiling& t);
void for_each_legal_path(const GTiling& t, const std::function<void(const LegalPath&)>& f);
std::vector<LegalPath> legal_paths(const GTiling& t);
std::uint64_t count_legal_paths(const GTiling& t);

LegalPath legal_path_from_separator(const GTiling& t, const SeparatorChain& s);
GTiling tiling_from_ws(const Collection& c);

}  // namespace wsep
