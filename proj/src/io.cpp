#include "wsep/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wsep {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("parse", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

int ground(const Json& j) {
  int n = int_field(j, "n");
  if (n < 0 || n > kMaxN) bad("n out of range");
  return n;
}

}  // namespace

Json set_to_json(Mask x) {
  Json a = Json::array();
  for (int i : elements(x)) a.push_back(i);
  return a;
}

Mask set_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("a set must be a list of integers");
  Mask x = 0;
  int last = 0;
  for (const Json& e : j) {
    if (!e.is_number_integer()) bad("set elements must be integers");
    int i = e.get<int>();
    if (i <= last || i > n) bad("set elements must be strictly increasing within [n]");
    last = i;
    x |= bit(i);
  }
  return x;
}

Json to_json(const Collection& c) {
  Json s = Json::array();
  for (Mask x : c) s.push_back(set_to_json(x));
  return {{"n", c.n()}, {"sets", s}};
}

Json to_json(const HSCollection& c) {
  Json j = to_json(c.sets());
  j["m"] = c.m();
  return j;
}

Json to_json(const TPFunction& f) {
  std::vector<Mask> xs(f.values.size());
  for (std::size_t x = 0; x < xs.size(); ++x) xs[x] = static_cast<Mask>(x);
  std::sort(xs.begin(), xs.end(), canonical_less);
  Json v = Json::array();
  for (Mask x : xs) v.push_back(Json::array({set_to_json(x), f(x)}));
  return {{"n", f.n}, {"values", v}};
}

Json to_json(const GTiling& t) {
  Json a = Json::array();
  for (const Tile& tl : t.tiles()) a.push_back({{"X", set_to_json(tl.x)}, {"i", tl.i}, {"j", tl.j}, {"black", tl.black}});
  return {{"n", t.n()}, {"tiles", a}};
}

Json to_json(const Wiring& w) {
  Json cs = Json::array();
  for (const Crossing& c : w.crossings) cs.push_back({{"id", c.id}, {"i", c.i}, {"j", c.j}, {"black", c.black}});
  return {{"n", w.n}, {"crossings", cs}, {"wires", w.wires}};
}

Json to_json(const LegalPath& p) {
  Json vs = Json::array();
  for (Mask v : p.vertices) vs.push_back(set_to_json(v));
  Json fw = Json::array();
  for (bool f : p.forward) fw.push_back(f);
  return {{"n", p.n}, {"vertices", vs}, {"colors", p.colors}, {"forward", fw}};
}

Json to_json(const FlipCortege3& c, int) {
  return {{"X", set_to_json(c.x)}, {"i", c.i}, {"j", c.j}, {"k", c.k}, {"lowering", c.lowering}, {"strong", c.strong}};
}

Json to_json(const FlipCortege4& c, int) {
  return {{"X", set_to_json(c.x)}, {"i", c.i}, {"j", c.j}, {"k", c.k}, {"l", c.l}, {"lowering", c.lowering}};
}

Collection collection_from_json(const Json& j) {
  int n = ground(j);
  const Json& s = field(j, "sets");
  if (!s.is_array()) bad("'sets' must be a list");
  std::vector<Mask> v;
  for (const Json& x : s) v.push_back(set_from_json(x, n));
  std::vector<Mask> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("duplicate set");
  return Collection(n, std::move(v));
}

TPFunction tp_function_from_json(const Json& j) {
  int n = ground(j);
  if (n > kMaxTropicalN) bad("n too large for a tropical function");
  const Json& vals = field(j, "values");
  if (!vals.is_array() || vals.size() != (std::size_t{1} << n)) bad("'values' must list all 2^n sets");
  TPFunction f{n, std::vector<Value>(std::size_t{1} << n)};
  std::vector<bool> seen(f.values.size(), false);
  for (const Json& pair : vals) {
    if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer()) bad("each value must be [set, int]");
    Mask x = set_from_json(pair[0], n);
    if (seen[x]) bad("set listed twice");
    seen[x] = true;
    f.values[x] = pair[1].get<Value>();
  }
  return f;
}

GTiling tiling_from_json(const Json& j) {
  int n = ground(j);
  const Json& ts = field(j, "tiles");
  if (!ts.is_array()) bad("'tiles' must be a list");
  std::vector<Tile> tiles;
  for (const Json& t : ts) {
    Tile tl{set_from_json(field(t, "X"), n), int_field(t, "i"), int_field(t, "j"), bool_field(t, "black")};
    if (!(1 <= tl.i && tl.i < tl.j && tl.j <= n) || (tl.x & (bit(tl.i) | bit(tl.j)))) bad("tile indices out of range");
    tiles.push_back(tl);
  }
  return GTiling(n, std::move(tiles));
}

Wiring wiring_from_json(const Json& j) {
  Wiring w;
  w.n = ground(j);
  const Json& cs = field(j, "crossings");
  const Json& ws = field(j, "wires");
  if (!cs.is_array() || !ws.is_array()) bad("'crossings' and 'wires' must be lists");
  for (const Json& c : cs)
    w.crossings.push_back({int_field(c, "id"), int_field(c, "i"), int_field(c, "j"), bool_field(c, "black")});
  for (const Json& wire : ws) {
    if (!wire.is_array()) bad("each wire must be a list of crossing ids");
    std::vector<int> ids;
    for (const Json& id : wire) {
      if (!id.is_number_integer()) bad("crossing ids must be integers");
      ids.push_back(id.get<int>());
    }
    w.wires.push_back(std::move(ids));
  }
  return w;
}

LegalPath legal_path_from_json(const Json& j) {
  int n = ground(j);
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be a list");
  std::vector<Mask> v;
  for (const Json& x : vs) v.push_back(set_from_json(x, n));
  LegalPath p;
  try {
    p = make_path(n, std::move(v));
  } catch (const Error& e) {
    bad(e.what());
  }
  if (j.contains("colors") && j.at("colors") != Json(p.colors)) bad("'colors' disagree with the vertices");
  if (j.contains("forward")) {
    Json fw = Json::array();
    for (bool f : p.forward) fw.push_back(f);
    if (j.at("forward") != fw) bad("'forward' disagrees with the vertices");
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("io", "cannot write " + path);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Collection parse_collection(const std::string& text, int n_hint) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Collection c = collection_from_json(parse_json(text));
    if (n_hint && c.n() != n_hint) bad("n in the file differs from --n");
    return c;
  }
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  int n = n_hint;
  while (in >> line) {
    lines.push_back(line);
    if (!n_hint)
      for (char ch : line)
        if (ch >= '1' && ch <= '9') n = std::max(n, ch - '0');
  }
  if (lines.empty()) bad("empty collection");
  std::vector<Mask> v;
  for (const auto& l : lines) {
    try {
      v.push_back(parse_shorthand(l, n));
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  std::vector<Mask> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("duplicate set");
  return Collection(n, std::move(v));
}

}  // namespace wsep
