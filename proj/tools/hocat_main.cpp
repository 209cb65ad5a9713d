// hocat: necklace-based homotopy-category toolkit CLI.
//
// Exit codes: 0 success, 1 I/O error, 2 validation failure,
// 3 backend disagreement (reserved for that alone).

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hocat/corpus.hpp"
#include "hocat/fibration.hpp"
#include "hocat/json_io.hpp"
#include "hocat/localize.hpp"
#include "hocat/necklace.hpp"
#include "hocat/segalify.hpp"

using namespace hocat;

namespace {

constexpr int kExitIO = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// deterministic parallel map: results land in input order regardless of jobs
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

TruncatedSSet load_sset(const std::string& path) {
  return sset_from_json(load_json_file(path));
}

Necklace parse_necklace_or_throw(const std::string& s) {
  auto n = parse_necklace(s);
  if (!n) throw std::runtime_error("bad necklace literal: " + s);
  return *n;
}

int run_validate(const std::string& path, bool as_json) {
  TruncatedSSet X = load_sset(path);
  ValidationReport rep = validate(X);
  if (as_json) {
    json j{{"file", path}, {"ok", rep.ok}, {"violations", json::array()}};
    for (const auto& v : rep.violations)
      j["violations"].push_back({{"identity", v.identity},
                                 {"dimension", v.dimension},
                                 {"simplex", v.simplex}});
    std::cout << j.dump(2) << "\n";
    return rep.ok ? 0 : kExitValidation;
  }
  if (rep.ok) {
    std::cout << "ok: " << path << "\n";
    return 0;
  }
  for (const auto& v : rep.violations)
    std::cout << "violation: " << v.identity << " at dim " << v.dimension
              << " (" << v.simplex << ")\n";
  return kExitValidation;
}

struct HomTable {
  std::vector<std::vector<int>> counts;  // [x][y]
  bool exact = true;
  int bound = 0;
};

HomTable hom_necklace(const TruncatedSSet& X, int bound) {
  H1Result r = h1_necklace(X, bound);
  HomTable t{{}, r.exact, r.bound};
  t.counts.resize(X.num_cells(0));
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y)
      t.counts[x].push_back(int(r.hom(x, y).size()));
  return t;
}

HomTable hom_rewrite(const TruncatedSSet& X, int max_rules, int max_lhs) {
  H1RewriteResult r = h1_rewrite(X, max_rules, max_lhs);
  HomTable t{{}, r.exact, 0};
  t.counts.resize(X.num_cells(0));
  if (!r.cat) {
    t.exact = false;
    for (auto& row : t.counts) row.assign(X.num_cells(0), -1);
    return t;
  }
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y)
      t.counts[x].push_back(int(r.cat->hom(x, y).size()));
  return t;
}

HomTable hom_localize(const TruncatedSSet& X) {
  ReducedLocalization loc = localize_reduced(X);
  HomTable t{{}, loc.exact, loc.bound};
  t.counts.resize(X.num_cells(0));
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y)
      t.counts[x].push_back(int(loc.sat.hom_classes(loc.pres, x, y).size()));
  return t;
}

void print_hom_table(const TruncatedSSet& X, const HomTable& t,
                     const std::string& backend) {
  std::cout << "backend=" << backend << " bound=" << t.bound
            << (t.exact ? " exact" : " bounded") << "\n";
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y)
      std::cout << "hom(" << X.cells[0][x] << "," << X.cells[0][y]
                << ") = " << t.counts[x][y] << "\n";
}

json hom_table_json(const TruncatedSSet& X, const HomTable& t,
                    const std::string& backend) {
  json hom = json::object();
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y)
      hom[X.cells[0][x]][X.cells[0][y]] = t.counts[x][y];
  return {{"backend", backend},
          {"bound", t.bound},
          {"exact", t.exact},
          {"hom", hom}};
}

int run_homcat(const std::string& path, const std::string& backend, bool compare,
               int bound, int budget, bool dump_engine, bool as_json) {
  TruncatedSSet X = load_sset(path);
  if (!validate(X).ok) {
    std::cout << "input fails validation\n";
    return kExitValidation;
  }
  if (dump_engine) {
    H1RewriteResult r = h1_rewrite(X, budget, 12);
    std::cout << r.engine.dump(r.hp.pres) << "\n";
  }
  if (!compare) {
    HomTable t = backend == "rewrite"    ? hom_rewrite(X, budget, 12)
                 : backend == "localize" ? hom_localize(X)
                                         : hom_necklace(X, bound);
    if (as_json)
      std::cout << hom_table_json(X, t, backend).dump(2) << "\n";
    else
      print_hom_table(X, t, backend);
    return 0;
  }
  HomTable nec = hom_necklace(X, bound);
  HomTable rw = hom_rewrite(X, budget, 12);
  HomTable lc = hom_localize(X);
  json jout;
  if (as_json)
    jout["backends"] = {hom_table_json(X, nec, "necklace"),
                        hom_table_json(X, rw, "rewrite"),
                        hom_table_json(X, lc, "localize")};
  else {
    print_hom_table(X, nec, "necklace");
    print_hom_table(X, rw, "rewrite");
    print_hom_table(X, lc, "localize");
  }
  bool agree = nec.counts == rw.counts && nec.counts == lc.counts;
  std::string why;
  if (agree && nec.exact && rw.exact) {
    H1Result hn = h1_necklace(X, bound);
    H1RewriteResult hr = h1_rewrite(X, budget, 12);
    agree = backends_agree(X, hn, hr, &why);
  }
  if (agree) {
    CompareLocalizationReport rep = compare_localization(X);
    if (rep.conclusive && !rep.equivalence) {
      agree = false;
      why = "localization comparison: " + rep.detail;
    }
  }
  if (as_json) {
    jout["agree"] = agree;
    if (!agree) jout["detail"] = why;
    std::cout << jout.dump(2) << "\n";
    return agree ? 0 : kExitDisagreement;
  }
  if (!agree) {
    std::cout << "BACKEND DISAGREEMENT" << (why.empty() ? "" : ": " + why) << "\n";
    return kExitDisagreement;
  }
  std::cout << "backends agree\n";
  return 0;
}

int run_mapspace(const std::string& path, const std::string& from,
                 const std::string& to, int bound, bool as_json) {
  TruncatedSSet X = load_sset(path);
  int x = X.cell_index(0, from), y = X.cell_index(0, to);
  if (x < 0 || y < 0) {
    std::cout << "unknown vertex\n";
    return kExitValidation;
  }
  EdgeGraphInfo gi = edge_graph_info(X);
  int b = bound >= 0 ? bound : (gi.acyclic ? gi.longest_path + 2 : 8);
  auto ms = mapping_set(X, x, y);
  SliceGraph g = slice_category(X, x, y, b);
  Pi0Result p = pi0(g);
  if (as_json) {
    json j{{"bound", b},
           {"objects", g.objects.size()},
           {"pi0", p.num_components},
           {"h1_classes", nullptr}};
    if (ms) j["h1_classes"] = ms->size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "slice bound=" << b << " objects=" << g.objects.size()
            << " pi0=" << p.num_components << "\n";
  if (ms)
    std::cout << "h1 hom classes=" << ms->size() << "\n";
  else
    std::cout << "h1 not materializable (cyclic edge graph)\n";
  return 0;
}

int run_nec(const std::vector<std::string>& args, int bound) {
  if (args.empty()) throw std::runtime_error("nec: missing subcommand");
  const std::string& op = args[0];
  if (op == "hom" && args.size() == 3) {
    Necklace A = parse_necklace_or_throw(args[1]);
    Necklace B = parse_necklace_or_throw(args[2]);
    auto maps = hom_set(A, B);
    std::cout << "hom(" << necklace_literal(A) << "," << necklace_literal(B)
              << ") = " << maps.size() << "\n";
    for (const auto& m : maps) {
      std::cout << " ";
      for (int v : m.vertex_map) std::cout << " " << v;
      std::cout << "\n";
    }
  } else if (op == "thin" && args.size() == 2) {
    Necklace N = parse_necklace_or_throw(args[1]);
    std::cout << necklace_literal(N) << ": thin=" << (is_thin(N) ? "yes" : "no")
              << " very-thin=" << (is_very_thin(N) ? "yes" : "no") << "\n";
  } else if (op == "join" && args.size() >= 2) {
    std::vector<Necklace> Ms;
    for (size_t i = 1; i < args.size(); ++i)
      Ms.push_back(parse_necklace_or_throw(args[i]));
    JoinResult r = J(Ms);
    std::cout << necklace_literal(r.necklace) << " anchor";
    for (int v : r.anchor) std::cout << " " << v;
    std::cout << "\n";
  } else if (op == "jr" && args.size() == 3) {
    Necklace N = parse_necklace_or_throw(args[1]);
    Monotone alpha;
    std::stringstream ss(args[2]);
    for (std::string tok; std::getline(ss, tok, ',');) alpha.push_back(std::stoi(tok));
    for (const Necklace& piece : JR(N, alpha))
      std::cout << necklace_literal(piece) << "\n";
  } else if (op == "sifted" && args.size() == 3) {
    Necklace A = parse_necklace_or_throw(args[1]);
    Necklace B = parse_necklace_or_throw(args[2]);
    int b = bound >= 0 ? bound : A.total() + B.total() + 2;
    SiftedReport r = sifted_witness(A, B, b);
    std::cout << "bound=" << r.bound << " objects=" << r.num_objects
              << " components=" << r.num_components
              << (r.connected ? " connected" : " disconnected")
              << (r.conclusive ? "" : " (inconclusive)") << "\n";
  } else if (op == "realize" && args.size() == 2) {
    Necklace N = parse_necklace_or_throw(args[1]);
    TruncatedSSet R = realize(N, 3);
    for (int n = 0; n <= 3; ++n)
      std::cout << "cells[" << n << "] = " << R.num_cells(n) << "\n";
  } else {
    throw std::runtime_error("nec: unknown subcommand or wrong arity");
  }
  return 0;
}

int run_localize(const std::string& path, int verify_cap, int budget,
                 bool as_json) {
  TruncatedSSet X = load_sset(path);
  if (!validate(X).ok) return kExitValidation;
  CompareLocalizationReport rep = compare_localization(X);
  if (as_json) {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"x", X.cells[0][r.x]},
                      {"y", X.cells[0][r.y]},
                      {"loc_classes", r.loc_classes},
                      {"h1_classes", r.h1_classes},
                      {"match", r.match}});
    json j{{"rows", rows},
           {"bound", rep.bound},
           {"conclusive", rep.conclusive},
           {"equivalence", rep.equivalence},
           {"detail", rep.detail}};
    std::cout << j.dump(2) << "\n";
  } else
    std::cout << rep.table() << "\n";
  if (verify_cap >= 0) {
    // verification mode: rebuild with degenerate objects up to the cap and
    // compare zigzag class counts on vertex pairs
    SimplexCategory C = simplex_category(X, verify_cap);
    PresentedCategory L = localize(C);
    bool same = true;
    ReducedLocalization red = localize_reduced(X);
    for (int x = 0; x < X.num_cells(0); ++x)
      for (int y = 0; y < X.num_cells(0); ++y) {
        int a = C.obj_index.at("0:" + X.cells[0][x]);
        int b = C.obj_index.at("0:" + X.cells[0][y]);
        int zz = count_loc_classes(L, a, b, budget);
        int rd = int(red.sat.hom_classes(red.pres, x, y).size());
        if (zz != rd) {
          same = false;
          std::cout << "verification mismatch at (" << X.cells[0][x] << ","
                    << X.cells[0][y] << "): zigzag=" << zz << " reduced=" << rd
                    << "\n";
        }
      }
    std::cout << "verification mode (cap=" << verify_cap << ", budget=" << budget
              << "): " << (same ? "agrees" : "DISAGREES") << "\n";
    if (!same) return kExitDisagreement;
  }
  return rep.conclusive && !rep.equivalence ? kExitDisagreement : 0;
}

int run_fib(const std::vector<std::string>& args, const std::string& out) {
  if (args.empty()) throw std::runtime_error("fib: missing subcommand");
  const std::string& op = args[0];
  if (op == "check" && args.size() == 2) {
    LoadedMap lm = map_from_json(load_json_file(args[1]));
    SSetMap p = lm.map();
    if (!validate_map(p).ok) {
      std::cout << "map fails validation\n";
      return kExitValidation;
    }
    FibrationReport rep = is_right_fibration(p);
    if (rep.is_right_fib)
      std::cout << "right fibration (levels 1.." << rep.levels_checked << ")\n";
    else {
      std::cout << "NOT a right fibration (n=" << rep.failures[0].level << ")\n";
      for (const auto& f : rep.failures)
        std::cout << "  level " << f.level << ": " << f.witness << "\n";
    }
    return 0;
  }
  if (op == "unstraighten" && args.size() == 2) {
    LoadedPresheaf lp = presheaf_from_json(load_json_file(args[1]));
    Presheaf F = lp.presheaf();
    if (!validate_presheaf(F).ok) {
      std::cout << "presheaf fails validation\n";
      return kExitValidation;
    }
    Unstraightened U = unstraighten(lp.base, F, 3);
    json j = map_to_json(U.projection);
    if (out.empty())
      std::cout << j.dump(2) << "\n";
    else
      save_json_file(out, j);
    return 0;
  }
  if (op == "straighten" && args.size() == 3) {
    LoadedMap lm = map_from_json(load_json_file(args[1]));
    ExplicitFinCategory C = category_from_json(load_json_file(args[2]));
    Presheaf F = straighten(lm.map(), C);
    json j = presheaf_to_json(F);
    if (out.empty())
      std::cout << j.dump(2) << "\n";
    else
      save_json_file(out, j);
    return 0;
  }
  throw std::runtime_error("fib: unknown subcommand or wrong arity");
}

int run_product(const std::string& px, const std::string& py,
                const std::string& out, bool check) {
  TruncatedSSet X = load_sset(px), Y = load_sset(py);
  if (!validate(X).ok || !validate(Y).ok) return kExitValidation;
  if (check) {
    std::string why;
    if (!product_compatibility_check(X, Y, &why)) {
      std::cout << "PRODUCT MISMATCH: " << why << "\n";
      return kExitDisagreement;
    }
    std::cout << "h1(XxY) = h1(X) x h1(Y): verified\n";
    return 0;
  }
  json j = sset_to_json(product(X, Y));
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out, j);
  return 0;
}

int run_corpus(const std::string& family, int size, std::uint64_t seed,
               const std::string& out_dir, int jobs, bool as_json) {
  auto instances = generate_corpus(family, size, seed);
  std::vector<std::string> lines(instances.size());
  std::vector<json> stats(instances.size());
  parallel_for(int(instances.size()), jobs, [&](int i) {
    const TruncatedSSet& X = instances[i];
    bool ok = validate(X).ok;
    std::ostringstream os;
    os << family << "-" << i << ": cells";
    json cells = json::array();
    for (int n = 0; n <= X.trunc_level; ++n) {
      os << " " << X.num_cells(n);
      cells.push_back(X.num_cells(n));
    }
    os << (ok ? " valid" : " INVALID");
    lines[i] = os.str();
    stats[i] = {{"name", family + "-" + std::to_string(i)},
                {"cells", cells},
                {"valid", ok}};
  });
  for (size_t i = 0; i < instances.size(); ++i) {
    if (!as_json) std::cout << lines[i] << "\n";
    if (!out_dir.empty())
      save_json_file(out_dir + "/" + family + "-" + std::to_string(i) + ".json",
                     sset_to_json(instances[i]));
  }
  if (as_json) std::cout << json(stats).dump(2) << "\n";
  return 0;
}

int run_bench(std::uint64_t seed, int max_spine, int bound, int jobs,
              bool as_json) {
  std::vector<std::pair<std::string, TruncatedSSet>> instances;
  for (int n = 3; n <= max_spine; ++n)
    instances.push_back({"spine-" + std::to_string(n), spine(n, 3)});
  for (auto& X : generate_corpus("random-dag-complex", 3, seed))
    instances.push_back(
        {"dag-" + std::to_string(instances.size()), std::move(X)});

  struct Row {
    std::string name;
    double thin_ms, naive_ms;
    long long thin_words, naive_words;
  };
  std::vector<Row> rows(instances.size());
  parallel_for(int(instances.size()), jobs, [&](int i) {
    const TruncatedSSet& X = instances[i].second;
    EdgeGraphInfo gi = edge_graph_info(X);
    int b = bound >= 0 ? bound : std::min(gi.acyclic ? gi.longest_path + 2 : 6, 6);
    auto t0 = std::chrono::steady_clock::now();
    H1Presentation hp = raw_edge_presentation(X);
    SaturationResult thin = saturate(hp.pres, {b, false});
    double thin_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    NaiveColimitResult naive = naive_necklace_colimit(X, b);
    rows[i] = {instances[i].first, thin_ms, ms_since(t0), thin.words_visited,
               naive.anchors_visited};
  });
  bool gap_ok = true;
  json jrows = json::array();
  if (!as_json) std::cout << "instance, backend, wall_ms, words_visited\n";
  for (const auto& r : rows) {
    if (as_json) {
      jrows.push_back({{"instance", r.name},
                       {"thin_ms", r.thin_ms},
                       {"thin_words", r.thin_words},
                       {"naive_ms", r.naive_ms},
                       {"naive_words", r.naive_words}});
    } else {
      std::cout << r.name << ", thin, " << r.thin_ms << ", " << r.thin_words
                << "\n";
      std::cout << r.name << ", naive, " << r.naive_ms << ", " << r.naive_words
                << "\n";
    }
    if (r.name.rfind("spine-", 0) == 0 && std::stoi(r.name.substr(6)) >= 6)
      gap_ok = gap_ok && r.thin_words < r.naive_words;
  }
  if (as_json)
    std::cout << json{{"rows", jrows}, {"gap_strict", gap_ok}}.dump(2) << "\n";
  else
    std::cout << "thin-vs-naive gap on spines >= 6: "
              << (gap_ok ? "strict" : "VIOLATED") << "\n";
  return gap_ok ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"necklace machinery for truncated simplicial sets"};
  app.require_subcommand(1);

  std::string file, file2, backend = "necklace", from, to, family = "spines";
  std::string out, out_dir, format = "text";
  std::vector<std::string> rest;
  bool compare = false, check = false, dump_engine = false;
  int bound = -1, budget = 2000, jobs = 1, verify_cap = -1, size = 5,
      max_spine = 8;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--bound", bound, "word/total-size bound (-1 = auto)");
    c->add_option("--budget", budget, "completion budget (rule count)");
    c->add_option("--seed", seed, "RNG seed");
    c->add_option("--jobs", jobs, "worker threads (deterministic merge)");
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* v = app.add_subcommand("validate", "validate a simplicial-set file");
  v->add_option("file", file)->required();
  v->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* h = app.add_subcommand("homcat", "compute h1 of a simplicial set");
  h->add_option("file", file)->required();
  h->add_option("--backend", backend)
      ->check(CLI::IsMember({"necklace", "rewrite", "localize"}));
  h->add_flag("--compare", compare, "run all backends and cross-check");
  h->add_flag("--dump-engine", dump_engine, "print the completed rule list");
  add_common(h);

  auto* m = app.add_subcommand("mapspace", "mapping set and slice pi0");
  m->add_option("file", file)->required();
  m->add_option("--from", from)->required();
  m->add_option("--to", to)->required();
  add_common(m);

  auto* n = app.add_subcommand("nec", "necklace category operations");
  n->add_option("args", rest, "hom A B | thin N | join Ms... | jr N a,b,c | "
                              "sifted A B | realize N");
  add_common(n);

  auto* l = app.add_subcommand("localize", "last-vertex localization vs h1");
  l->add_option("file", file)->required();
  l->add_option("--verify-cap", verify_cap,
                "also build degenerate objects up to this dimension");
  add_common(l);

  auto* f = app.add_subcommand("fib", "right-fibration tools");
  f->add_option("args", rest, "check MAP | straighten MAP CAT | unstraighten PSH");
  f->add_option("--out", out);
  add_common(f);

  auto* p = app.add_subcommand("product", "product of simplicial sets");
  p->add_option("x", file)->required();
  p->add_option("y", file2)->required();
  p->add_option("--out", out);
  p->add_flag("--check", check, "verify h1(XxY) = h1(X) x h1(Y)");
  add_common(p);

  auto* c = app.add_subcommand("corpus", "generate instance corpora");
  c->add_option("--family", family)->check(CLI::IsMember(corpus_families()));
  c->add_option("--size", size);
  c->add_option("--out-dir", out_dir);
  add_common(c);

  auto* b = app.add_subcommand("bench", "thin reduction vs naive colimit");
  b->add_option("--max-spine", max_spine);
  add_common(b);

  CLI11_PARSE(app, argc, argv);

  bool as_json = format == "json";
  try {
    if (v->parsed()) return run_validate(file, as_json);
    if (h->parsed()) return run_homcat(file, backend, compare, bound, budget,
                                       dump_engine, as_json);
    if (m->parsed()) return run_mapspace(file, from, to, bound, as_json);
    if (n->parsed()) return run_nec(rest, bound);
    if (l->parsed())
      return run_localize(file, verify_cap, bound >= 0 ? bound : 6, as_json);
    if (f->parsed()) return run_fib(rest, out);
    if (p->parsed()) return run_product(file, file2, out, check);
    if (c->parsed()) return run_corpus(family, size, seed, out_dir, jobs, as_json);
    if (b->parsed()) return run_bench(seed, max_spine, bound, jobs, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIO;
  }
  return 0;
}
