#pragma once

#include <map>
#include <vector>

#include "wsep/sets.hpp"
#include "wsep/tropical.hpp"

namespace wsep {

// A collection of m-element subsets of [n].
class HSCollection {
 public:
  HSCollection() = default;
  HSCollection(int n, int m, std::vector<Mask> sets);

  int n() const { return sets_.n(); }
  int m() const { return m_; }
  const Collection& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask x) const { return sets_.contains(x); }

  friend bool operator==(const HSCollection&, const HSCollection&) = default;
  friend bool operator<(const HSCollection& a, const HSCollection& b) {
    return a.m_ != b.m_ ? a.m_ < b.m_ : a.sets_ < b.sets_;
  }

 private:
  int m_ = 0;
  Collection sets_;
};

inline long long hs_largest_size(int n, int m) { return static_cast<long long>(m) * (n - m) + 1; }
// Largest ws size in the band mlo <= |S| <= mhi.
inline long long truncated_largest_size(int n, int mlo, int mhi) {
  return largest_ws_size(n) - binom2(n - mhi + 1) - binom2(mlo + 1);
}

// f is read only at the six sets of the cortege.
bool p4_holds(const std::map<Mask, Value>& f, Mask x, int i, int j, int k, int l);

HSCollection standard_basis(int n, int m);
HSCollection co_standard_basis(int n, int m);
bool is_largest_hs_ws(const HSCollection& b);

struct FlipCortege4 {
  Mask x = 0;
  int i = 0, j = 0, k = 0, l = 0;
  bool lowering = false;  // Xjl is replaced by Xik

  Mask xik() const { return x | bit(i) | bit(k); }
  Mask xjl() const { return x | bit(j) | bit(l); }
  friend bool operator==(const FlipCortege4&, const FlipCortege4&) = default;
};

// Lexicographic in (X, i, j, k, l).
std::vector<FlipCortege4> find_4flips(const HSCollection& b);
HSCollection apply_4flip(const HSCollection& b, const FlipCortege4& c);
long long eta(const Collection& b);
inline long long eta(const HSCollection& b) { return eta(b.sets()); }
// Greedy lowering 4-flips down to IS_n^m; throws "not-largest-ws" or "stuck-not-standard".
std::vector<FlipCortege4> descend_hs(const HSCollection& b);

// B^Delta in Delta_{n+n'}^n for B over [n].
HSCollection embed_delta(const Collection& b, int nprime);

Collection truncated_standard(int n, int mlo, int mhi);

struct TruncatedDescent {
  std::vector<FlipCortege3> three;
  std::vector<FlipCortege4> four;
};

TruncatedDescent descend_truncated(const Collection& c, int mlo, int mhi);

}  // namespace wsep
