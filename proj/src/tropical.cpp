#include "wsep/tropical.hpp"

#include <algorithm>
#include <optional>

namespace wsep {

namespace {

void check_cortege(int n, Mask x, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= n)) throw Error("bad-cortege", "need 1 <= i < j < k <= n");
  if (x & (bit(i) | bit(j) | bit(k))) throw Error("bad-cortege", "indices overlap X");
  if (x & ~full_set(n)) throw Error("bad-cortege", "X outside [n]");
}

template <class F>
void for_each_cortege(int n, F&& f) {
  Mask u = full_set(n);
  for (Mask x = 0;; ++x) {
    for (int i = 1; i <= n; ++i) {
      if (has(x, i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (has(x, j)) continue;
        for (int k = j + 1; k <= n; ++k)
          if (!has(x, k)) f(x, i, j, k);
      }
    }
    if (x == u) break;
  }
}

}  // namespace

bool p3_holds(const TPFunction& f, Mask x, int i, int j, int k) {
  check_cortege(f.n, x, i, j, k);
  Mask bi = bit(i), bj = bit(j), bk = bit(k);
  return f(x | bi | bk) + f(x | bj) ==
         std::max(f(x | bi | bj) + f(x | bk), f(x | bi) + f(x | bj | bk));
}

bool satisfies_p3(const TPFunction& f) {
  bool ok = true;
  for_each_cortege(f.n, [&](Mask x, int i, int j, int k) {
    if (ok && !p3_holds(f, x, i, j, k)) ok = false;
  });
  return ok;
}

TPFunction extend_from_intervals(int n, const std::map<Mask, Value>& values) {
  if (n < 1 || n > kMaxTropicalN) throw Error("bad-n", "tropical functions need 1 <= n <= 20");
  Collection in = standard_intervals(n);
  if (values.size() != in.size()) throw Error("bad-values", "values must be given exactly on I_n");
  std::size_t total = std::size_t{1} << n;
  std::vector<std::optional<Value>> v(total);
  for (auto [x, val] : values) {
    if (!in.contains(x)) throw Error("bad-values", to_string(x, n) + " is not an interval");
    v[x] = val;
  }
  std::size_t known = values.size();
  // Solve each (P3) instance for whichever left-hand argument is missing; this closure
  // covers every set reachable by raising flips from I_n, which is all of 2^[n].
  bool progress = true;
  while (known < total && progress) {
    progress = false;
    for_each_cortege(n, [&](Mask x, int i, int j, int k) {
      Mask bi = bit(i), bj = bit(j), bk = bit(k);
      auto& a = v[x | bi | bk];
      auto& b = v[x | bj];
      const auto& c = v[x | bi | bj];
      const auto& d = v[x | bk];
      const auto& e = v[x | bi];
      const auto& g = v[x | bj | bk];
      if (!c || !d || !e || !g || (a && b) || (!a && !b)) return;
      Value rhs = std::max(*c + *d, *e + *g);
      if (a) b = rhs - *a;
      else a = rhs - *b;
      ++known;
      progress = true;
    });
  }
  if (known < total) throw Error("stuck", "fixpoint left " + std::to_string(total - known) + " values unknown");
  TPFunction f{n, std::vector<Value>(total)};
  for (std::size_t x = 0; x < total; ++x) f.values[x] = *v[x];
  if (!satisfies_p3(f)) throw Error("inconsistent", "extension violates (P3)");
  return f;
}

std::vector<FlipCortege3> find_3flips(const Collection& b) {
  std::vector<FlipCortege3> out;
  int n = b.n();
  if (n < 3) return out;
  for_each_cortege(n, [&](Mask x, int i, int j, int k) {
    Mask bi = bit(i), bj = bit(j), bk = bit(k);
    if (!b.contains(x | bi) || !b.contains(x | bk) || !b.contains(x | bi | bj) || !b.contains(x | bj | bk))
      return;
    bool hj = b.contains(x | bj), hik = b.contains(x | bi | bk);
    if (hj == hik) return;
    bool strong = b.contains(x) && b.contains(x | bi | bj | bk);
    out.push_back({x, i, j, k, hik, strong});
  });
  return out;
}

Collection apply_3flip(const Collection& b, const FlipCortege3& c) {
  auto all = find_3flips(b);
  if (std::find(all.begin(), all.end(), c) == all.end())
    throw Error("bad-cortege", "cortege is not a flip of this collection");
  return c.lowering ? b.with(c.xj(), c.xik()) : b.with(c.xik(), c.xj());
}

std::vector<FlipCortege3> descend_to_standard(const Collection& b) {
  std::vector<FlipCortege3> seq;
  Collection cur = b;
  Collection target = standard_intervals(b.n());
  while (!(cur == target)) {
    auto flips = find_3flips(cur);
    auto it = std::find_if(flips.begin(), flips.end(), [](const FlipCortege3& c) { return c.lowering; });
    if (it == flips.end())
      throw Error("stuck-not-standard", "no lowering flip from " + cur.to_string());
    seq.push_back(*it);
    cur = cur.with(it->xj(), it->xik());
  }
  return seq;
}

TPFunction extend_from_basis(const Collection& b, const std::map<Mask, Value>& values) {
  int n = b.n();
  if (values.size() != b.size()) throw Error("bad-values", "values must be given exactly on B");
  for (auto& [x, val] : values)
    if (!b.contains(x)) throw Error("bad-values", to_string(x, n) + " is not in B");
  auto seq = descend_to_standard(b);
  std::map<Mask, Value> cur = values;
  for (const auto& c : seq) {
    Mask bi = bit(c.i), bj = bit(c.j), bk = bit(c.k), x = c.x;
    Value rhs = std::max(cur.at(x | bi | bj) + cur.at(x | bk), cur.at(x | bi) + cur.at(x | bj | bk));
    cur[x | bj] = rhs - cur.at(x | bi | bk);
    cur.erase(x | bi | bk);
  }
  TPFunction f = extend_from_intervals(n, cur);
  for (auto& [x, val] : values)
    if (f(x) != val) throw Error("inconsistent", "restriction differs at " + to_string(x, n));
  return f;
}

}  // namespace wsep
