#include <doctest.h>

#include "wsep/harness.hpp"
#include "wsep/io.hpp"

using namespace wsep;

namespace {

Mask s(const char* t) { return parse_shorthand(t, 9); }

Collection b_paper() {
  std::vector<Mask> v;
  for (auto x : {"-", "1", "4", "12", "14", "23", "24", "34", "123", "234", "1234"}) v.push_back(s(x));
  return Collection(4, v);
}

template <class F>
std::string parse_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("collection json") {
  Json j = to_json(b_paper());
  CHECK(j["n"] == 4);
  CHECK(j["sets"][0] == Json::array());
  CHECK(j["sets"][4] == Json::array({2, 3}));
  CHECK(j["sets"][5] == Json::array({1, 4}));
  CHECK(collection_from_json(j) == b_paper());
  CHECK(collection_from_json(parse_json(j.dump())) == b_paper());
  CHECK(parse_code([] { collection_from_json(parse_json(R"({"n":3,"sets":[[2,1]]})")); }) == "parse");
  CHECK(parse_code([] { collection_from_json(parse_json(R"({"n":3,"sets":[[4]]})")); }) == "parse");
  CHECK(parse_code([] { collection_from_json(parse_json(R"({"n":3,"sets":[[1],[1]]})")); }) == "parse");
  CHECK(parse_code([] { collection_from_json(parse_json(R"({"sets":[]})")); }) == "parse");
  CHECK(parse_code([] { parse_json("{\"n\": 3, \"sets\": [["); }) == "parse");
}

TEST_CASE("shorthand collections") {
  CHECK(parse_collection("-\n1\n4\n12\n14\n23\n24\n34\n123\n234\n1234\n") == b_paper());
  CHECK(parse_collection("13\n24").n() == 4);
  CHECK(parse_collection("1\n2", 5).n() == 5);
  CHECK(parse_code([] { parse_collection("12\n12"); }) == "parse");
  CHECK(parse_code([] { parse_collection(""); }) == "parse");
  CHECK(parse_code([] { parse_collection("1x"); }) == "parse");
  CHECK(parse_collection(to_json(b_paper()).dump()) == b_paper());
}

TEST_CASE("tiling, wiring and path json round trips") {
  GTiling t = from_spectrum(b_paper());
  CHECK(tiling_from_json(parse_json(to_json(t).dump())) == t);
  Wiring w = tiling_to_wiring(t);
  CHECK(wiring_from_json(parse_json(to_json(w).dump())) == w);
  LegalPath p = contract(t).path;
  CHECK(legal_path_from_json(parse_json(to_json(p).dump())) == p);
  Json bad = to_json(p);
  bad["colors"][0] = 3;
  CHECK(parse_code([&] { legal_path_from_json(bad); }) == "parse");
  Json tile = to_json(t);
  tile["tiles"][0]["i"] = 9;
  CHECK(parse_code([&] { tiling_from_json(tile); }) == "parse");
}

TEST_CASE("tp function json") {
  std::map<Mask, Value> v;
  for (Mask x : standard_intervals(3)) v[x] = card(x);
  TPFunction f = extend_from_intervals(3, v);
  Json j = to_json(f);
  CHECK(j["values"].size() == 8);
  CHECK(tp_function_from_json(parse_json(j.dump())) == f);
  j["values"].erase(0);
  CHECK(parse_code([&] { tp_function_from_json(j); }) == "parse");
}

TEST_CASE("hyper-simplex json keeps the level") {
  Json j = to_json(standard_basis(4, 2));
  CHECK(j["m"] == 2);
  CHECK(j["sets"].size() == 5);
}

TEST_CASE("file helpers") {
  CHECK(parse_code([] { read_file("/nonexistent/dir/file.json"); }) == "io");
  CHECK(parse_code([] { write_file("/nonexistent/dir/file.json", "x"); }) == "io");
}
