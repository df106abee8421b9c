#pragma once

#include <set>
#include <string>
#include <vector>

#include "wsep/gtiling.hpp"
#include "wsep/hypersimplex.hpp"
#include "wsep/sets.hpp"
#include "wsep/wiring.hpp"

namespace wsep {

// All weakly separated collections of the given size inside universe (at most 64 sets).
std::vector<Collection> ws_cliques(int n, const std::vector<Mask>& universe, std::size_t target);

std::vector<Collection> oracle_largest_ws(int n, bool force = false);
std::vector<HSCollection> oracle_largest_hs_ws(int n, int m, bool force = false);
std::vector<Collection> oracle_largest_truncated(int n, int mlo, int mhi, bool force = false);

enum class FlipKind { Three, Four, Both };

std::vector<Collection> flip_neighbors(const Collection& c, FlipKind kind);

struct OrbitReport {
  int n = 0;
  std::vector<Collection> members;  // canonical order
  std::size_t edges = 0;
  int diameter = 0;

  std::vector<std::string> manifest() const;  // sorted hex digests
};

OrbitReport flip_orbit(const Collection& start, FlipKind kind, bool with_diameter = true);

// Every g-tiling over n, built by expanding each tiling over n-1 along its legal paths.
std::vector<GTiling> enumerate_tilings(int n);

struct TheoremAReport {
  int n = 0;
  std::set<Collection> orbit, wirings, tilings, oracle;
  std::size_t tiling_count = 0;
  std::size_t reconstructed = 0;  // orbit members accepted by from_spectrum
  std::vector<std::string> problems;

  bool all_equal() const;
  static std::vector<std::string> manifest(const std::set<Collection>& s);
};

TheoremAReport verify_theorem_a(int n, bool force = false);

std::string render_svg(const GTiling& t);
std::string render_svg(const Wiring& w);

}  // namespace wsep
