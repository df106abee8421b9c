#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsep/sets.hpp"

namespace wsep {

using Value = std::int64_t;

// A function on all of 2^[n], indexed by mask.
struct TPFunction {
  int n = 0;
  std::vector<Value> values;

  Value operator()(Mask x) const { return values[x]; }
  friend bool operator==(const TPFunction&, const TPFunction&) = default;
};

constexpr int kMaxTropicalN = 20;

bool p3_holds(const TPFunction& f, Mask x, int i, int j, int k);
// Checks every admissible cortege; returns false on the first failure.
bool satisfies_p3(const TPFunction& f);

TPFunction extend_from_intervals(int n, const std::map<Mask, Value>& values);

struct FlipCortege3 {
  Mask x = 0;
  int i = 0, j = 0, k = 0;
  bool lowering = false;
  bool strong = false;

  Mask xj() const { return x | bit(j); }
  Mask xik() const { return x | bit(i) | bit(k); }
  friend bool operator==(const FlipCortege3&, const FlipCortege3&) = default;
};

std::vector<FlipCortege3> find_3flips(const Collection& b);
Collection apply_3flip(const Collection& b, const FlipCortege3& c);
// Greedy lowering descent to I_n; throws "stuck-not-standard".
std::vector<FlipCortege3> descend_to_standard(const Collection& b);
TPFunction extend_from_basis(const Collection& b, const std::map<Mask, Value>& values);

}  // namespace wsep
