// Command-line front end. Exit codes: 0 success, 1 property fails, 2 usage or parse error.
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wsep/harness.hpp"
#include "wsep/hypersimplex.hpp"
#include "wsep/io.hpp"
#include "wsep/surgery.hpp"
#include "wsep/tropical.hpp"
#include "wsep/wiring.hpp"

using namespace wsep;

namespace {

struct Fail {
  Json diag;
};

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

[[noreturn]] void fail(Json diag) { throw Fail{std::move(diag)}; }

Json load(const std::string& path) { return parse_json(read_file(path)); }

Mask parse_set_arg(const std::string& s, int n) {
  Mask x = 0;
  if (s.empty() || s == "-") return x;
  std::stringstream ss(s);
  std::string tok;
  std::vector<int> e;
  while (std::getline(ss, tok, ',')) {
    try {
      e.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("parse", "bad set '" + s + "'");
    }
  }
  try {
    return from_elements(e, n);
  } catch (const Error& err) {
    throw Error("parse", err.what());
  }
}

Json violations_json(const std::vector<Violation>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back({{"rule", x.rule}, {"detail", x.detail}});
  return a;
}

Json non_separated_pairs(const Collection& c, std::size_t limit) {
  Json a = Json::array();
  const auto& s = c.sets();
  for (std::size_t p = 0; p < s.size() && a.size() < limit; ++p)
    for (std::size_t q = p + 1; q < s.size() && a.size() < limit; ++q)
      if (!weakly_separated(s[p], s[q])) a.push_back(Json::array({set_to_json(s[p]), set_to_json(s[q])}));
  return a;
}

Collection load_collection(const std::string& path, int n) { return parse_collection(read_file(path), n); }

std::string cache_file(const std::string& dir, const std::string& name) {
  if (dir.empty()) return {};
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

std::string manifest_text(const std::vector<std::string>& digests) {
  std::string out;
  for (const auto& d : digests) out += Json(d).dump() + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly separated collections, generalized tilings and wiring diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  std::string cache;
  bool force = false;
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--cache", cache, "directory for enumeration manifests");
  app.add_flag("--force", force, "lift the default size guards");

  std::string file, file2, out;
  int n_opt = 0, m_opt = 0, nprime = 0, mlo = 0, mhi = 0, trials = 200;
  int fi = 0, fj = 0, fk = 0;
  std::string fx;
  bool count_only = false, co = false, tilings_out = false;
  std::string kind = "3";

  auto* check_ws = app.add_subcommand("check-ws", "is a collection weakly separated (and largest)");
  check_ws->add_option("file", file)->required();
  check_ws->add_option("--n", n_opt, "ground size for shorthand input");

  auto* check_basis = app.add_subcommand("check-basis", "is a collection a semi-normal basis");
  check_basis->add_option("file", file)->required();
  check_basis->add_option("--n", n_opt);

  auto* descend = app.add_subcommand("descend", "greedy lowering 3-flips down to the intervals");
  descend->add_option("file", file)->required();
  descend->add_option("--n", n_opt);

  auto* flip = app.add_subcommand("flip", "list 3-flips, or apply the one given by --X --i --j --k");
  flip->add_option("file", file)->required();
  flip->add_option("--n", n_opt);
  flip->add_option("--X", fx, "comma-separated elements of X");
  flip->add_option("--i", fi);
  flip->add_option("--j", fj);
  flip->add_option("--k", fk);

  auto* from_spec = app.add_subcommand("tiling-from-spectrum", "reconstruct the g-tiling with this spectrum");
  from_spec->add_option("file", file)->required();
  from_spec->add_option("--n", n_opt);

  auto* t2w = app.add_subcommand("tiling-to-wiring", "wiring diagram of a g-tiling");
  t2w->add_option("file", file)->required();

  auto* w2t = app.add_subcommand("wiring-to-tiling", "g-tiling of a proper wiring");
  w2t->add_option("file", file)->required();

  auto* contract_cmd = app.add_subcommand("contract", "n-contraction and its legal path");
  contract_cmd->add_option("file", file)->required();

  auto* expand_cmd = app.add_subcommand("expand", "n-expansion along a legal path");
  expand_cmd->add_option("tiling", file)->required();
  expand_cmd->add_option("path", file2)->required();

  auto* lp = app.add_subcommand("legal-paths", "legal paths of a g-tiling");
  lp->add_option("file", file)->required();
  lp->add_flag("--count", count_only);

  auto* enumerate = app.add_subcommand("enumerate", "all g-tilings over n via expansions");
  enumerate->add_option("n", n_opt)->required();
  enumerate->add_flag("--tilings", tilings_out, "print the tilings instead of spectrum digests");

  auto* orbit = app.add_subcommand("orbit", "flip orbit of a collection (default: the intervals)");
  orbit->add_option("--file", file);
  orbit->add_option("--n", n_opt);
  orbit->add_option("--kind", kind, "3, 4 or both")->check(CLI::IsMember({"3", "4", "both"}));
  orbit->add_option("--manifest", out, "write digests as JSON lines");

  auto* thm = app.add_subcommand("verify-theorem-a", "compare the four characterizations");
  thm->add_option("n", n_opt)->required();

  auto* hs_std = app.add_subcommand("hs-standard", "standard (or co-standard) basis of the hyper-simplex");
  hs_std->add_option("n", n_opt)->required();
  hs_std->add_option("m", m_opt)->required();
  hs_std->add_flag("--co", co);

  auto* hs_check = app.add_subcommand("hs-check", "largest weakly separated in the hyper-simplex");
  hs_check->add_option("file", file)->required();
  hs_check->add_option("--n", n_opt);

  auto* hs_descend = app.add_subcommand("hs-descend", "greedy lowering 4-flips down to IS");
  hs_descend->add_option("file", file)->required();
  hs_descend->add_option("--n", n_opt);

  auto* hs_orbit = app.add_subcommand("hs-orbit", "4-flip orbit of IS against the clique oracle");
  hs_orbit->add_option("n", n_opt)->required();
  hs_orbit->add_option("m", m_opt)->required();

  auto* hs_embed = app.add_subcommand("hs-embed", "embed a cube basis into the hyper-simplex");
  hs_embed->add_option("file", file)->required();
  hs_embed->add_option("nprime", nprime)->required();
  hs_embed->add_option("--n", n_opt);

  auto* hs_trunc = app.add_subcommand("hs-truncated", "two-phase descent in a truncated cube");
  hs_trunc->add_option("file", file)->required();
  hs_trunc->add_option("--mlo", mlo)->required();
  hs_trunc->add_option("--mhi", mhi)->required();
  hs_trunc->add_option("--n", n_opt);

  auto* render = app.add_subcommand("render", "SVG of a tiling or wiring JSON file");
  render->add_option("file", file)->required();
  render->add_option("--out", out)->required();

  auto* trop = app.add_subcommand("tropical-check", "random interval valuations extend to TP-functions");
  trop->add_option("n", n_opt)->required();
  trop->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check_ws) {
      Collection c = load_collection(file, n_opt);
      bool ws = is_ws_collection(c);
      Json j{{"n", c.n()}, {"size", c.size()}, {"ws", ws}, {"largest", ws && is_largest_ws(c)}};
      if (!ws) j["non_separated"] = non_separated_pairs(c, 10);
      emit(j);
      return ws ? 0 : 1;
    }
    if (*check_basis) {
      Collection c = load_collection(file, n_opt);
      Json j{{"n", c.n()}, {"size", c.size()}};
      if (!is_largest_ws(c)) {
        j["basis"] = false;
        j["reason"] = "not a largest weakly separated collection";
        emit(j);
        return 1;
      }
      j["basis"] = true;
      j["descent_length"] = descend_to_standard(c).size();
      emit(j);
      return 0;
    }
    if (*descend) {
      Collection c = load_collection(file, n_opt);
      Json seq = Json::array();
      for (const auto& f : descend_to_standard(c)) seq.push_back(to_json(f, c.n()));
      emit({{"flips", seq}});
      return 0;
    }
    if (*flip) {
      Collection c = load_collection(file, n_opt);
      if (!fi) {
        Json a = Json::array();
        for (const auto& f : find_3flips(c)) a.push_back(to_json(f, c.n()));
        emit({{"flips", a}});
        return 0;
      }
      Mask x = parse_set_arg(fx, c.n());
      for (const auto& f : find_3flips(c))
        if (f.x == x && f.i == fi && f.j == fj && f.k == fk) {
          emit(to_json(apply_3flip(c, f)));
          return 0;
        }
      fail({{"error", "bad-cortege"}, {"detail", "no such flip"}});
    }
    if (*from_spec) {
      emit(to_json(from_spectrum(load_collection(file, n_opt))));
      return 0;
    }
    if (*t2w) {
      emit(to_json(tiling_to_wiring(tiling_from_json(load(file)))));
      return 0;
    }
    if (*w2t) {
      Wiring w = wiring_from_json(load(file));
      auto v = validate_wiring(w);
      if (!v.empty()) fail({{"error", "not-proper"}, {"violations", violations_json(v)}});
      emit(to_json(wiring_to_tiling(w)));
      return 0;
    }
    if (*contract_cmd) {
      GTiling t = tiling_from_json(load(file));
      auto v = validate(t);
      if (!v.empty()) fail({{"error", "invalid-tiling"}, {"violations", violations_json(v)}});
      Contraction c = contract(t);
      emit({{"tiling", to_json(c.tiling)}, {"path", to_json(c.path)}});
      return 0;
    }
    if (*expand_cmd) {
      GTiling t = tiling_from_json(load(file));
      LegalPath p = legal_path_from_json(load(file2));
      auto v = legal_violations(t, p);
      if (!v.empty()) fail({{"error", "illegal-path"}, {"violations", v}});
      emit(to_json(expand(t, p)));
      return 0;
    }
    if (*lp) {
      GTiling t = tiling_from_json(load(file));
      require_valid(t);
      if (count_only) {
        emit({{"count", count_legal_paths(t)}});
        return 0;
      }
      Json a = Json::array();
      for_each_legal_path(t, [&](const LegalPath& p) { a.push_back(to_json(p)); });
      emit({{"count", a.size()}, {"paths", a}});
      return 0;
    }
    if (*enumerate) {
      if (n_opt > 6 && !force) throw Error("size-guard", "enumeration beyond n = 6 needs --force");
      std::string cf = cache_file(cache, "tilings-n" + std::to_string(n_opt) + ".jsonl");
      if (!tilings_out && !cf.empty() && std::filesystem::exists(cf)) {
        std::cout << read_file(cf);
        return 0;
      }
      auto ts = enumerate_tilings(n_opt);
      if (tilings_out) {
        for (const auto& t : ts) std::cout << to_json(t).dump() << "\n";
        return 0;
      }
      std::vector<std::string> d;
      for (const auto& t : ts) d.push_back(hex_digest(spectrum(t)));
      std::sort(d.begin(), d.end());
      std::string text = manifest_text(d);
      if (!cf.empty()) write_file(cf, text);
      std::cout << text;
      return 0;
    }
    if (*orbit) {
      Collection start = file.empty() ? standard_intervals(n_opt) : load_collection(file, n_opt);
      FlipKind fk2 = kind == "3" ? FlipKind::Three : kind == "4" ? FlipKind::Four : FlipKind::Both;
      if (start.n() > 6 && !force) throw Error("size-guard", "orbits beyond n = 6 need --force");
      auto rep = flip_orbit(start, fk2);
      std::string text = manifest_text(rep.manifest());
      if (!out.empty()) write_file(out, text);
      std::string cf = cache_file(cache, "orbit-" + hex_digest(start) + "-" + kind + ".jsonl");
      if (!cf.empty()) write_file(cf, text);
      emit({{"n", rep.n}, {"members", rep.members.size()}, {"edges", rep.edges}, {"diameter", rep.diameter}});
      return 0;
    }
    if (*thm) {
      auto rep = verify_theorem_a(n_opt, force);
      Json j{{"n", rep.n},
             {"orbit", rep.orbit.size()},
             {"wirings", rep.wirings.size()},
             {"tilings", rep.tilings.size()},
             {"oracle", rep.oracle.size()},
             {"tiling_count", rep.tiling_count},
             {"reconstructed", rep.reconstructed},
             {"orbit_eq_wirings", rep.orbit == rep.wirings},
             {"wirings_eq_tilings", rep.wirings == rep.tilings},
             {"tilings_eq_oracle", rep.tilings == rep.oracle},
             {"orbit_eq_oracle", rep.orbit == rep.oracle},
             {"problems", rep.problems},
             {"all_equal", rep.all_equal()}};
      if (!cache.empty()) write_file(cache_file(cache, "theorem-a-n" + std::to_string(n_opt) + ".jsonl"),
                                     manifest_text(TheoremAReport::manifest(rep.orbit)));
      emit(j);
      return rep.all_equal() ? 0 : 1;
    }
    if (*hs_std) {
      emit(to_json(co ? co_standard_basis(n_opt, m_opt) : standard_basis(n_opt, m_opt)));
      return 0;
    }
    if (*hs_check || *hs_descend) {
      Collection c = load_collection(file, n_opt);
      if (c.size() == 0) throw Error("parse", "empty collection");
      HSCollection b(c.n(), card(c.sets().front()), c.sets());
      bool ok = is_largest_hs_ws(b);
      if (*hs_check) {
        emit({{"n", b.n()}, {"m", b.m()}, {"size", b.size()}, {"largest_ws", ok}});
        return ok ? 0 : 1;
      }
      Json seq = Json::array();
      for (const auto& f : descend_hs(b)) seq.push_back(to_json(f, b.n()));
      emit({{"flips", seq}, {"eta", eta(b)}});
      return 0;
    }
    if (*hs_orbit) {
      auto rep = flip_orbit(standard_basis(n_opt, m_opt).sets(), FlipKind::Four);
      auto oracle = oracle_largest_hs_ws(n_opt, m_opt, force);
      std::set<Collection> a(rep.members.begin(), rep.members.end()), b;
      for (const auto& h : oracle) b.insert(h.sets());
      emit({{"n", n_opt}, {"m", m_opt}, {"orbit", a.size()}, {"oracle", b.size()}, {"equal", a == b}, {"diameter", rep.diameter}});
      return a == b ? 0 : 1;
    }
    if (*hs_embed) {
      Collection c = load_collection(file, n_opt);
      HSCollection e = embed_delta(c, nprime);
      Json j = to_json(e);
      j["descent_length"] = descend_hs(e).size();
      emit(j);
      return 0;
    }
    if (*hs_trunc) {
      Collection c = load_collection(file, n_opt);
      auto d = descend_truncated(c, mlo, mhi);
      Json a = Json::array(), b = Json::array();
      for (const auto& f : d.three) a.push_back(to_json(f, c.n()));
      for (const auto& f : d.four) b.push_back(to_json(f, c.n()));
      emit({{"three_flips", a}, {"four_flips", b}});
      return 0;
    }
    if (*render) {
      Json j = load(file);
      std::string svg = j.contains("wires") ? render_svg(wiring_from_json(j)) : render_svg(tiling_from_json(j));
      write_file(out, svg);
      return 0;
    }
    if (*trop) {
      if (n_opt < 1 || n_opt > 12) throw Error("parse", "tropical-check needs 1 <= n <= 12");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Value> dist(-1000, 1000);
      int bad = 0;
      for (int t = 0; t < trials; ++t) {
        std::map<Mask, Value> vals;
        for (Mask x : standard_intervals(n_opt)) vals[x] = dist(rng);
        if (!satisfies_p3(extend_from_intervals(n_opt, vals))) ++bad;
      }
      emit({{"n", n_opt}, {"trials", trials}, {"seed", seed}, {"failures", bad}});
      return bad ? 1 : 0;
    }
  } catch (const Fail& f) {
    emit(f.diag);
    return 1;
  } catch (const Error& e) {
    bool usage = e.code() == "parse" || e.code() == "io" || e.code() == "size-guard" || e.code() == "bad-set";
    if (usage) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    emit({{"error", e.code()}, {"detail", e.what()}});
    return 1;
  }
  return 2;
}
