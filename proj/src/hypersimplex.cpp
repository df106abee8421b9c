#include "wsep/hypersimplex.hpp"

#include <algorithm>

namespace wsep {

namespace {

// Masks of size k inside [n], ascending.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::uint64_t x = (std::uint64_t{1} << k) - 1, lim = std::uint64_t{1} << n;
  while (x < lim) {
    f(static_cast<Mask>(x));
    std::uint64_t c = x & -x, r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

void check_band(int n, int m) {
  if (n < 0 || n > kMaxN || m < 0 || m > n) throw Error("bad-level", "need 0 <= m <= n");
}

std::vector<Mask> intervals_of_size(int n, int m) {
  if (m == 0) return {0};
  std::vector<Mask> out;
  for (int a = 1; a + m - 1 <= n; ++a) out.push_back(interval(a, a + m - 1));
  return out;
}

}  // namespace

HSCollection::HSCollection(int n, int m, std::vector<Mask> sets) : m_(m), sets_(n, std::move(sets)) {
  check_band(n, m);
  for (Mask x : sets_)
    if (card(x) != m) throw Error("bad-level", to_string(x, n) + " does not have size " + std::to_string(m));
}

bool p4_holds(const std::map<Mask, Value>& f, Mask x, int i, int j, int k, int l) {
  if (!(1 <= i && i < j && j < k && k < l)) throw Error("bad-cortege", "need i < j < k < l");
  if (x & (bit(i) | bit(j) | bit(k) | bit(l))) throw Error("bad-cortege", "indices overlap X");
  auto at = [&](int a, int b) {
    auto it = f.find(x | bit(a) | bit(b));
    if (it == f.end()) throw Error("bad-values", "function undefined at a cortege set");
    return it->second;
  };
  return at(i, k) + at(j, l) == std::max(at(i, j) + at(k, l), at(i, l) + at(j, k));
}

HSCollection standard_basis(int n, int m) {
  check_band(n, m);
  std::vector<Mask> v = intervals_of_size(n, m);
  for (int p = 1; p < m; ++p)
    for (int q = p + 2; q + (m - p) - 1 <= n; ++q) v.push_back(interval(1, p) | interval(q, q + m - p - 1));
  HSCollection b(n, m, std::move(v));
  if (static_cast<long long>(b.size()) != hs_largest_size(n, m)) throw Error("internal", "standard basis has the wrong size");
  return b;
}

HSCollection co_standard_basis(int n, int m) {
  check_band(n, m);
  std::vector<Mask> v = intervals_of_size(n, m);
  for (int s = 1; s < m; ++s) {
    int r = n - s + 1;  // suffix [r..n] of size s
    for (int q = r - 2; q - (m - s) + 1 >= 1; --q) v.push_back(interval(q - (m - s) + 1, q) | interval(r, n));
  }
  HSCollection b(n, m, std::move(v));
  if (static_cast<long long>(b.size()) != hs_largest_size(n, m))
    throw Error("internal", "co-standard basis has the wrong size");
  return b;
}

bool is_largest_hs_ws(const HSCollection& b) {
  return static_cast<long long>(b.size()) == hs_largest_size(b.n(), b.m()) && is_ws_collection(b.sets());
}

std::vector<FlipCortege4> find_4flips(const HSCollection& b) {
  std::vector<FlipCortege4> out;
  int n = b.n(), m = b.m();
  if (m < 2 || n - m < 2) return out;
  for_each_k_subset(n, m - 2, [&](Mask x) {
    for (int i = 1; i <= n; ++i) {
      if (has(x, i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (has(x, j) || !b.contains(x | bit(i) | bit(j))) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (has(x, k) || !b.contains(x | bit(j) | bit(k))) continue;
          for (int l = k + 1; l <= n; ++l) {
            if (has(x, l)) continue;
            if (!b.contains(x | bit(k) | bit(l)) || !b.contains(x | bit(i) | bit(l))) continue;
            FlipCortege4 c{x, i, j, k, l, false};
            bool ik = b.contains(c.xik()), jl = b.contains(c.xjl());
            if (ik == jl) continue;
            c.lowering = jl;
            out.push_back(c);
          }
        }
      }
    }
  });
  return out;
}

HSCollection apply_4flip(const HSCollection& b, const FlipCortege4& c) {
  auto all = find_4flips(b);
  if (std::find(all.begin(), all.end(), c) == all.end())
    throw Error("bad-cortege", "cortege is not a flip of this collection");
  Collection next = c.lowering ? b.sets().with(c.xik(), c.xjl()) : b.sets().with(c.xjl(), c.xik());
  return HSCollection(b.n(), b.m(), next.sets());
}

long long eta(const Collection& b) {
  long long s = 0;
  for (Mask x : b)
    for (int i : elements(x)) s += i;
  return s;
}

std::vector<FlipCortege4> descend_hs(const HSCollection& b) {
  if (!is_largest_hs_ws(b)) throw Error("not-largest-ws", "input is not a largest weakly separated collection");
  HSCollection target = standard_basis(b.n(), b.m());
  std::vector<FlipCortege4> seq;
  HSCollection cur = b;
  while (!(cur == target)) {
    auto flips = find_4flips(cur);
    auto it = std::find_if(flips.begin(), flips.end(), [](const FlipCortege4& c) { return c.lowering; });
    if (it == flips.end()) throw Error("stuck-not-standard", "no lowering 4-flip from " + cur.sets().to_string());
    long long before = eta(cur);
    cur = HSCollection(cur.n(), cur.m(), cur.sets().with(it->xik(), it->xjl()).sets());
    if (eta(cur) >= before) throw Error("internal", "eta did not decrease");
    seq.push_back(*it);
  }
  return seq;
}

HSCollection embed_delta(const Collection& b, int nprime) {
  int n = b.n(), nn = n + nprime;
  if (nprime < n || nn > kMaxN) throw Error("bad-n", "embedding needs n <= n' and n + n' <= 32");
  std::vector<Mask> v;
  for (int q = n + 1; q < nn; ++q) v.push_back(interval(q - n + 1, q));
  for (int r = n + 3; r <= nn; ++r) {
    int tail = nn - r + 1;
    if (tail >= n) continue;
    for (int q = n + 1; q + 1 < r; ++q) {
      int p = q - (n - tail) + 1;
      if (p >= 1) v.push_back(interval(p, q) | interval(r, nn));
    }
  }
  for (Mask x : b) v.push_back(x | interval(nn - (n - card(x)) + 1, nn));
  return HSCollection(nn, n, std::move(v));
}

Collection truncated_standard(int n, int mlo, int mhi) {
  if (!(0 <= mlo && mlo <= mhi && mhi <= n)) throw Error("bad-level", "need 0 <= mlo <= mhi <= n");
  std::vector<Mask> v = standard_basis(n, mlo).sets().sets();
  for (int h = mlo + 1; h <= mhi; ++h)
    for (Mask x : intervals_of_size(n, h)) v.push_back(x);
  Collection c(n, std::move(v));
  if (static_cast<long long>(c.size()) != truncated_largest_size(n, mlo, mhi))
    throw Error("internal", "truncated standard basis has the wrong size");
  return c;
}

TruncatedDescent descend_truncated(const Collection& c, int mlo, int mhi) {
  int n = c.n();
  if (!(0 <= mlo && mlo <= mhi && mhi <= n)) throw Error("bad-level", "need 0 <= mlo <= mhi <= n");
  for (Mask x : c)
    if (card(x) < mlo || card(x) > mhi) throw Error("bad-level", to_string(x, n) + " lies outside the band");
  if (static_cast<long long>(c.size()) != truncated_largest_size(n, mlo, mhi) || !is_ws_collection(c))
    throw Error("not-largest-ws", "input is not a largest weakly separated collection in the band");
  TruncatedDescent d;
  Collection cur = c;
  for (;;) {
    auto flips = find_3flips(cur);
    auto it = std::find_if(flips.begin(), flips.end(), [](const FlipCortege3& f) { return f.lowering; });
    if (it == flips.end()) break;
    d.three.push_back(*it);
    cur = cur.with(it->xj(), it->xik());
  }
  std::vector<Mask> level, rest;
  for (Mask x : cur) (card(x) == mlo ? level : rest).push_back(x);
  for (Mask x : rest)
    if (!is_interval(x)) throw Error("stuck-not-standard", "non-interval " + to_string(x, n) + " above the bottom level");
  d.four = descend_hs(HSCollection(n, mlo, level));
  return d;
}

}  // namespace wsep
