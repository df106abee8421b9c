#include "wsep/sets.hpp"

#include <algorithm>
#include <cstdio>

namespace wsep {

std::vector<int> elements(Mask x) {
  std::vector<int> out;
  while (x) {
    out.push_back(min_elem(x));
    x &= x - 1;
  }
  return out;
}

Mask from_elements(const std::vector<int>& elems, int n) {
  Mask x = 0;
  int last = 0;
  for (int e : elems) {
    if (e < 1 || e > n) throw Error("bad-set", "element " + std::to_string(e) + " outside [1.." + std::to_string(n) + "]");
    if (e <= last) throw Error("bad-set", "elements must be strictly increasing");
    last = e;
    x |= bit(e);
  }
  return x;
}

std::string to_string(Mask x, int n) {
  if (n <= 9) {
    if (!x) return "-";
    std::string s;
    for (int e : elements(x)) s.push_back(static_cast<char>('0' + e));
    return s;
  }
  std::string s = "{";
  bool first = true;
  for (int e : elements(x)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

Mask parse_shorthand(const std::string& s, int n) {
  if (s == "-") return 0;
  std::vector<int> e;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw Error("bad-set", "bad shorthand '" + s + "'");
    e.push_back(ch - '0');
  }
  return from_elements(e, n);
}

bool is_interval(Mask x) {
  if (!x) return true;
  return interval(min_elem(x), max_elem(x)) == x;
}

bool prec(Mask x, Mask y) {
  Mask a = x & ~y, b = y & ~x;
  if (!b) return false;
  if (!a) return true;
  return max_elem(a) < min_elem(b);
}

bool rhd(Mask x, Mask y) {
  Mask a = x & ~y, d = y & ~x;
  if (!a || !d) return false;
  Mask below = full_set(min_elem(a) - 1);
  Mask above = ~full_set(max_elem(a));
  Mask y1 = d & below, y2 = d & above;
  return y1 && y2 && (y1 | y2) == d;
}

bool strongly_separated(Mask x, Mask y) { return x == y || prec(x, y) || prec(y, x); }

bool weakly_separated(Mask x, Mask y) {
  if (strongly_separated(x, y)) return true;
  int cx = card(x), cy = card(y);
  return (cx >= cy && rhd(x, y)) || (cy >= cx && rhd(y, x));
}

Collection::Collection(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > kMaxN) throw Error("bad-n", "ground size " + std::to_string(n) + " outside [0..32]");
  Mask u = full_set(n);
  for (Mask x : sets_)
    if (x & ~u) throw Error("bad-set", wsep::to_string(x, 32) + " is not a subset of [" + std::to_string(n) + "]");
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
    throw Error("duplicate-member", "collection has a repeated set");
}

bool Collection::contains(Mask x) const {
  return std::binary_search(sets_.begin(), sets_.end(), x, canonical_less);
}

Collection Collection::with(Mask add, Mask remove) const {
  std::vector<Mask> v;
  v.reserve(sets_.size() + 1);
  for (Mask x : sets_)
    if (x != remove) v.push_back(x);
  v.push_back(add);
  return Collection(n_, std::move(v));
}

long long Collection::size_sum() const {
  long long s = 0;
  for (Mask x : sets_) s += card(x);
  return s;
}

std::string Collection::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (k) s += ",";
    s += wsep::to_string(sets_[k], n_);
  }
  return s + "}";
}

Collection standard_intervals(int n) {
  std::vector<Mask> v{0};
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) v.push_back(interval(a, b));
  return Collection(n, std::move(v));
}

Collection complement(const Collection& c) {
  std::vector<Mask> v;
  for (Mask x : c) v.push_back(full_set(c.n()) & ~x);
  return Collection(c.n(), std::move(v));
}

Collection co_standard_intervals(int n) { return complement(standard_intervals(n)); }

bool is_ws_collection(const Collection& c) {
  const auto& s = c.sets();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!weakly_separated(s[a], s[b])) return false;
  return true;
}

bool is_largest_ws(const Collection& c) {
  return static_cast<long long>(c.size()) == largest_ws_size(c.n()) && is_ws_collection(c);
}

Projection project(const Collection& c) {
  int n = c.n();
  if (n < 1) throw Error("bad-n", "projection needs n >= 1");
  Mask top = bit(n);
  std::vector<Mask> cp, m, nn, s;
  for (Mask x : c) {
    Mask base = x & ~top;
    bool lo = c.contains(base), hi = c.contains(base | top);
    if ((x & top) && lo) continue;  // counted once, from the lower copy
    cp.push_back(base);
    if (lo && hi) s.push_back(base);
    else if (lo) m.push_back(base);
    else nn.push_back(base);
  }
  return {Collection(n - 1, cp), Collection(n - 1, m), Collection(n - 1, nn), Collection(n - 1, s)};
}

SeparatorChain separator(const Collection& c) {
  int n = c.n();
  Projection p = project(c);
  SeparatorChain chain(n, 0);
  std::vector<int> seen(n, 0);
  for (Mask x : p.s) {
    int h = card(x);
    if (h >= n) throw Error("not-largest-ws", "separator member of size " + std::to_string(h));
    chain[h] = x;
    ++seen[h];
  }
  for (int h = 0; h < n; ++h)
    if (seen[h] != 1)
      throw Error("not-largest-ws", "level " + std::to_string(h) + " of the separator has " +
                                        std::to_string(seen[h]) + " members");
  for (int h = 1; h < n; ++h)
    if (!prec(chain[h - 1], chain[h]))
      throw Error("not-largest-ws", "separator is not a chain at level " + std::to_string(h));
  return chain;
}

Collection restore_from_projection(const Collection& cprime, const SeparatorChain& s) {
  int n = cprime.n() + 1;
  if (static_cast<int>(s.size()) != n) throw Error("bad-separator", "chain length must be n");
  for (int h = 0; h < n; ++h) {
    if (card(s[h]) != h) throw Error("bad-separator", "S_h must have size h");
    if (!cprime.contains(s[h])) throw Error("bad-separator", "separator member outside C'");
    if (h > 0 && !prec(s[h - 1], s[h])) throw Error("bad-separator", "chain is not increasing");
  }
  Mask top = bit(n);
  std::vector<Mask> out;
  for (Mask x : cprime) {
    Mask sh = s[card(x)];
    if (x == sh) {
      out.push_back(x);
      out.push_back(x | top);
    } else if (prec(x, sh)) {
      out.push_back(x);
    } else if (prec(sh, x)) {
      out.push_back(x | top);
    } else {
      throw Error("incomparable-member", wsep::to_string(x, n) + " vs " + wsep::to_string(sh, n));
    }
  }
  return Collection(n, std::move(out));
}

Collection straight_extension(const Collection& c, int mlo, int mhi) {
  int n = c.n();
  if (mlo < 0 || mhi > n || mlo > mhi) throw Error("bad-band", "need 0 <= mlo <= mhi <= n");
  std::vector<Mask> v(c.begin(), c.end());
  for (Mask x : c)
    if (card(x) < mlo || card(x) > mhi) throw Error("out-of-band", wsep::to_string(x, n));
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      Mask iv = interval(a, b);
      if (card(iv) > mhi) v.push_back(iv);
      Mask co = full_set(n) & ~iv;
      if (card(co) < mlo) v.push_back(co);
    }
  return Collection(n, std::move(v));
}

std::uint64_t digest(const Collection& c) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(c.n()));
  for (Mask x : c) mix(x);
  return h;
}

std::string hex_digest(const Collection& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest(c)));
  return buf;
}

}  // namespace wsep
