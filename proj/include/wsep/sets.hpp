#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsep {

// A subset of [n] as a bitmask; element i lives in bit i-1.
using Mask = std::uint32_t;

constexpr int kMaxN = 32;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

constexpr Mask bit(int i) { return Mask{1} << (i - 1); }

constexpr Mask full_set(int n) {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

// [a..b]; empty when a > b.
constexpr Mask interval(int a, int b) {
  if (a > b) return 0;
  return full_set(b) & ~full_set(a - 1);
}

inline int card(Mask x) { return std::popcount(x); }
inline bool has(Mask x, int i) { return (x & bit(i)) != 0; }
inline int min_elem(Mask x) { return std::countr_zero(x) + 1; }
inline int max_elem(Mask x) { return 32 - std::countl_zero(x); }

std::vector<int> elements(Mask x);
Mask from_elements(const std::vector<int>& elems, int n);

// Digit shorthand for n <= 9 ("-" for the empty set), else "{1,10,...}".
std::string to_string(Mask x, int n = 9);
Mask parse_shorthand(const std::string& s, int n);

// Canonical order: by size, then colex (which is numeric order on masks of equal size).
inline bool canonical_less(Mask a, Mask b) {
  int ca = card(a), cb = card(b);
  return ca != cb ? ca < cb : a < b;
}

bool is_interval(Mask x);

// X < Y: Y-X nonempty and every element of X-Y is below every element of Y-X.
bool prec(Mask x, Mask y);
// X |> Y: Y-X = Y1 u Y2 with Y1, Y2, X-Y nonempty and Y1 < X-Y < Y2.
bool rhd(Mask x, Mask y);
// Identical sets count as separated so that collection checks can ignore the diagonal.
bool weakly_separated(Mask x, Mask y);
bool strongly_separated(Mask x, Mask y);

class Collection {
 public:
  Collection() = default;
  Collection(int n, std::vector<Mask> sets);

  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Mask>& sets() const { return sets_; }
  bool contains(Mask x) const;
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  Collection with(Mask add, Mask remove) const;
  long long size_sum() const;

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }
  friend bool operator<(const Collection& a, const Collection& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.sets_ < b.sets_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Mask> sets_;  // canonical order, no duplicates
};

inline long long binom2(long long a) { return a * (a - 1) / 2; }
inline long long largest_ws_size(int n) { return binom2(n + 1) + 1; }

Collection standard_intervals(int n);     // I_n, with the empty set
Collection co_standard_intervals(int n);  // {[n]-X : X in I_n}
Collection complement(const Collection& c);

bool is_ws_collection(const Collection& c);
bool is_largest_ws(const Collection& c);

struct Projection {
  Collection cprime, m, nn, s;
};

Projection project(const Collection& c);

using SeparatorChain = std::vector<Mask>;  // S_0..S_{n-1}, |S_h| = h

SeparatorChain separator(const Collection& c);
Collection restore_from_projection(const Collection& cprime, const SeparatorChain& s);

Collection straight_extension(const Collection& c, int mlo, int mhi);

// FNV-1a over the canonical listing; stable across runs and platforms.
std::uint64_t digest(const Collection& c);
std::string hex_digest(const Collection& c);

}  // namespace wsep
