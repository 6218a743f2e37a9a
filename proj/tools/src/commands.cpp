#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "server.hpp"
#include "../verify/acceptance.hpp"

namespace qca::cli {

using io::json;

namespace {

Quiver named_quiver(const std::string& name) {
  if (name == "a1") return Quiver(1, {});
  if (name == "a2") return Quiver(2, {{1, 2}});
  if (name == "a3") return Quiver(3, {{1, 3}, {2, 3}});
  if (name == "a3-linear") return Quiver(3, {{1, 2}, {2, 3}});
  if (name == "triangle") return Quiver(3, {{1, 2}, {2, 3}, {1, 3}});
  if (name == "kronecker") return Quiver(2, {{1, 2}, {1, 2}});
  throw Error("invalid_argument", "unknown quiver name '" + name + "' (a1, a2, a3, a3-linear, triangle, kronecker)");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("invalid_json", path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("invalid_argument", "bad mutation word entry '" + tok + "'");
    }
  }
  return w;
}

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> v;
  for (int x : parse_word(text)) v.push_back(x);
  return v;
}

// The ways to name a starting point shared by most subcommands.
struct SeedSource {
  std::string seed_file, quiver_file, named = "a3", setting = "E";
  int level = 1;

  void add_to(CLI::App* app, bool with_seed = true) {
    if (with_seed) app->add_option("--seed-file,--seed", seed_file, "seed snapshot JSON");
    app->add_option("--quiver,--file", quiver_file, "quiver JSON");
    app->add_option("--named", named, "built-in quiver: a1, a2, a3, a3-linear, triangle, kronecker");
    app->add_option("--level", level, "z-pattern level")->check(CLI::PositiveNumber);
    app->add_option("--setting", setting, "twist: E (z-pattern form) or L")->check(CLI::IsMember({"E", "L"}));
  }

  Quiver quiver() const { return quiver_file.empty() ? named_quiver(named) : io::quiver_from_json(read_json_file(quiver_file)); }

  std::pair<io::SeedConfig, QuantumSeed> seed() const {
    if (!seed_file.empty()) return io::seed_from_json(read_json_file(seed_file));
    io::SeedConfig c{quiver(), level, io::parse_setting(setting)};
    return {c, io::initial_seed_for(c)};
  }
};

// Options for random kernels and point counting.
struct CountOptions {
  std::uint64_t rng_seed = GenericOptions{}.rng_seed;
  int max_dim = GrassOptions{}.max_dim;
  int primes = GrassOptions{}.extra_primes;

  void add_to(CLI::App* app) {
    app->add_option("--rng-seed", rng_seed, "seed for random kernels");
    app->add_option("--max-dim", max_dim, "largest module dimension to count (env QCA_MAX_DIM)")
        ->envname("QCA_MAX_DIM")
        ->check(CLI::PositiveNumber);
    app->add_option("--primes", primes, "extra primes used to verify interpolated counts")->check(CLI::NonNegativeNumber);
  }
  GenericOptions generic() const {
    GenericOptions g;
    g.rng_seed = rng_seed;
    return g;
  }
  GrassOptions grass() const {
    GrassOptions g;
    g.max_dim = max_dim;
    g.extra_primes = primes;
    return g;
  }
};

WVector read_w(const std::string& arg) {
  if (arg.find(':') != std::string::npos) return io::parse_wvector(arg);
  return io::wvector_from_json(read_json_file(arg));
}

json exploration_snapshot(const io::SeedConfig& c, const ExplorationGraph& g, int depth) {
  return {{"schema", io::kSchemaVersion}, {"kind", "exploration"}, {"config", io::config_to_json(c)},
          {"depth", depth}, {"graph", io::to_json(g)}};
}

// Every node and edge of the saved graph must reappear, in order, at the front of the new one.
bool extends(const json& saved, const json& fresh) {
  for (const char* key : {"nodes", "edges"}) {
    const json &a = saved.at(key), &b = fresh.at(key);
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
  }
  return true;
}

json form_value(const Forms& f, const std::string& name, const WVector& w1, const WVector& w2) {
  const GradedVector &a = w1.graded(), &b = w2.graded();
  if (name == "E" || name == "e_prime") return f.e_prime(a, b);
  if (name == "N" || name == "n") return f.n_form(a, b);
  if (name == "d_w" || name == "d") return f.d_w(a, b);
  if (name == "quadratic_n") return f.quadratic_n(a);
  if (name == "beta") return io::to_json(f.beta(a));
  if (name == "ind") return f.ind(a);
  if (name == "euler") return f.k0().euler(f.beta(a), f.beta(b)).get_str();
  if (name == "symmetric") return f.k0().symmetric(f.beta(a), f.beta(b)).get_str();
  throw Error("invalid_argument",
              "unknown form '" + name + "' (E, N, d_w, quadratic_n, beta, ind, euler, symmetric)");
}

json basis_table(BasisContext& ctx, const std::vector<WVector>& ws) {
  json rows = json::array();
  for (const auto& w : ws) rows.push_back({{"w", io::to_json(w)}, {"can", io::to_json(ctx.canonical(w))}});
  return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quantum cluster algebra workbench", "qca"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_version_flag("--version", "qca 0.1.0");
  int indent = 2;
  app.add_option("--indent", indent, "JSON indentation (-1 for one line)");

  std::function<json()> action;
  int exit_override = 0;

  // quiver build-z
  auto* quiver_cmd = app.add_subcommand("quiver", "quiver constructions")->require_subcommand(1);
  auto* build_cmd = quiver_cmd->add_subcommand("build-z", "level-l z-pattern ice quiver, B~ and Lambda");
  SeedSource build_src;
  build_src.add_to(build_cmd, false);
  build_cmd->callback([&] {
    action = [&] {
      Quiver q = build_src.quiver();
      IceQuiver iq = build_z(q, build_src.level);
      return json{{"quiver", io::to_json(q)},
                  {"level", build_src.level},
                  {"ice_quiver", io::to_json(iq)},
                  {"b_tilde", io::to_json(b_matrix(iq))},
                  {"lambda", io::to_json(lambda_z(iq))}};
    };
  });

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation word to a seed");
  SeedSource mutate_src;
  std::string word_text;
  mutate_src.add_to(mutate_cmd);
  mutate_cmd->add_option("--word", word_text, "comma separated vertices, e.g. 1,2,1");
  mutate_cmd->callback([&] {
    action = [&] {
      auto [c, s] = mutate_src.seed();
      for (int k : parse_word(word_text))
        if (k < 1 || k > s.mutable_count())
          throw Error("invalid_vertex", "vertex " + std::to_string(k) + " is not mutable");
      return io::seed_to_json(c, mutate_word(s, parse_word(word_text)));
    };
  });

  // explore
  auto* explore_cmd = app.add_subcommand("explore", "breadth-first exchange graph");
  SeedSource explore_src;
  int depth = 4;
  std::size_t max_nodes = ExploreOptions{}.max_nodes;
  bool dedupe = true;
  std::string save_path, load_path;
  explore_src.add_to(explore_cmd);
  explore_cmd->add_option("--depth", depth, "mutation depth")->check(CLI::NonNegativeNumber);
  explore_cmd->add_option("--max-nodes", max_nodes, "node cap");
  explore_cmd->add_flag("--dedupe", dedupe, "identify seeds up to permutation (always on)");
  explore_cmd->add_option("--save", save_path, "write an exploration snapshot");
  explore_cmd->add_option("--load", load_path, "continue from an exploration snapshot");
  explore_cmd->callback([&] {
    action = [&] {
      io::SeedConfig c;
      QuantumSeed s;
      json saved;
      if (!load_path.empty()) {
        saved = read_json_file(load_path);
        io::check_schema(saved);
        if (saved.value("kind", "") != "exploration") throw Error("invalid_json", "not an exploration snapshot");
        c = io::config_from_json(saved.at("config"));
        s = io::initial_seed_for(c);
        if (depth < saved.at("depth").get<int>())
          throw Error("invalid_argument", "--depth is below the snapshot depth");
      } else {
        std::tie(c, s) = explore_src.seed();
      }
      ExplorationGraph g = explore(s, {depth, max_nodes});
      json out_j = io::to_json(g);
      if (!saved.is_null() && !extends(saved.at("graph"), out_j))
        throw Error("inconsistent_snapshot", "the exploration snapshot is not a prefix of the recomputed graph");
      if (!save_path.empty()) write_json_file(save_path, exploration_snapshot(c, g, depth));
      out_j["depth"] = depth;
      out_j["dedupe"] = true;
      if (!saved.is_null()) out_j["extended_from"] = saved.at("depth");
      return out_j;
    };
  });

  // variable
  auto* variable_cmd = app.add_subcommand("variable", "one cluster variable with its g-vector");
  SeedSource variable_src;
  std::string variable_word;
  int index = 1;
  variable_src.add_to(variable_cmd);
  variable_cmd->add_option("--word", variable_word, "mutation word from the seed");
  variable_cmd->add_option("--index,-i", index, "1-based variable index")->required();
  variable_cmd->callback([&] {
    action = [&] {
      auto [c, s] = variable_src.seed();
      QuantumSeed t = mutate_word(s, parse_word(variable_word));
      if (index < 1 || index > t.total()) throw Error("invalid_vertex", "index out of range");
      const TorusElement& x = t.vars[index - 1];
      return json{{"word", t.history},
                  {"index", index},
                  {"value", io::to_json(x)},
                  {"gvector", io::to_json(g_vector(x, io::initial_seed_for(c).b))}};
    };
  });

  // cc
  auto* cc_cmd = app.add_subcommand("cc", "quantum Caldero-Chapoton character of a module");
  SeedSource cc_src;
  CountOptions cc_count;
  std::string module_path, cc_w;
  bool allow_nonrigid = false;
  cc_src.add_to(cc_cmd, false);
  cc_count.add_to(cc_cmd);
  cc_cmd->add_option("--module", module_path, "representation JSON")->required();
  cc_cmd->add_option("--w", cc_w, "WVector JSON file or i:a:val list")->required();
  cc_cmd->add_flag("--allow-nonrigid", allow_nonrigid, "compute even when the module is not rigid");
  cc_cmd->callback([&] {
    action = [&] {
      Quiver q = cc_src.quiver();
      RationalRep m = io::rep_from_json(read_json_file(module_path), q);
      WVector w = read_w(cc_w);
      bool rigid = is_rigid(m);
      if (!rigid && !allow_nonrigid)
        throw Error("not_rigid", "module is not rigid; pass --allow-nonrigid to compute anyway");
      json j{{"w", io::to_json(w)}, {"rigid", rigid}, {"value", io::to_json(cc_character(m, w, cc_count.grass()))}};
      if (!rigid) j["caveat"] = "module is not rigid; the character is not claimed to be a cluster monomial";
      return j;
    };
  });

  // generic
  auto* generic_cmd = app.add_subcommand("generic", "generic character of a level-1 w");
  SeedSource generic_src;
  CountOptions generic_count;
  std::string generic_w;
  generic_src.add_to(generic_cmd, false);
  generic_count.add_to(generic_cmd);
  generic_cmd->add_option("--w", generic_w, "WVector JSON file or i:a:val list")->required();
  generic_cmd->callback([&] {
    action = [&] {
      Quiver q = generic_src.quiver();
      Forms f(q);
      WVector w = read_w(generic_w);
      GenericCharacter g = generic_character(q, w, generic_count.generic(), generic_count.grass());
      return json{{"w", io::to_json(w)},
                  {"rng_seed", generic_count.rng_seed},
                  {"kernel_seed", g.kernel.rng_seed},
                  {"kernel_dims", g.kernel.dims},
                  {"kernel", io::to_json(g.kernel.module)},
                  {"rigid", is_rigid(g.kernel.module)},
                  {"y", io::to_json(g.value)},
                  {"cor_E", io::to_json(cor_map(g.value, f, Setting::EPrime))},
                  {"cor_L", io::to_json(cor_map(g.value, f, Setting::L))}};
    };
  });

  // form
  auto* form_cmd = app.add_subcommand("form", "evaluate a bilinear form or map on WVectors");
  SeedSource form_src;
  std::string form_name, form_w1, form_w2 = "";
  form_src.add_to(form_cmd, false);
  form_cmd->add_option("--name", form_name, "E, N, d_w, quadratic_n, beta, ind, euler, symmetric")->required();
  form_cmd->add_option("--w1", form_w1, "WVector JSON file or i:a:val list")->required();
  form_cmd->add_option("--w2", form_w2, "second argument");
  form_cmd->callback([&] {
    action = [&] {
      Forms f(form_src.quiver());
      WVector w1 = read_w(form_w1), w2 = form_w2.empty() ? WVector() : read_w(form_w2);
      json value = form_value(f, form_name, w1, w2);  // outside the braces: a throw there leaks on gcc 11
      return json{{"name", form_name}, {"value", std::move(value)}};
    };
  });

  // canonical
  auto* canonical_cmd = app.add_subcommand("canonical", "canonical basis elements of a weight class");
  SeedSource canonical_src;
  std::string weight_text, canonical_w;
  int canonical_bound = 6;
  bool with_transition = false;
  canonical_src.add_to(canonical_cmd, false);
  canonical_cmd->add_option("--weight", weight_text, "beta(w) in the basis of simples, e.g. 1,0,1");
  canonical_cmd->add_option("--w", canonical_w, "a single WVector instead of a weight class");
  canonical_cmd->add_option("--bound", canonical_bound, "largest |w| searched in the weight class");
  canonical_cmd->add_flag("--transition", with_transition, "include the PBW expansion");
  canonical_cmd->callback([&] {
    action = [&] {
      Quiver q = canonical_src.quiver();
      BasisContext ctx(q, io::parse_setting(canonical_src.setting));
      std::vector<WVector> ws;
      if (!canonical_w.empty()) {
        ws.push_back(read_w(canonical_w));
      } else {
        auto classes = weight_classes(ctx.forms(), canonical_bound);
        std::vector<Int> coords;
        for (long long x : parse_ll_list(weight_text)) coords.push_back(Int(static_cast<long>(x)));
        if (static_cast<int>(coords.size()) != q.size())
          throw Error("invalid_argument", "--weight needs " + std::to_string(q.size()) + " entries");
        auto it = classes.find(K0Class(coords));
        if (it != classes.end()) ws = it->second;
      }
      json rows = basis_table(ctx, ws);
      if (with_transition)
        for (std::size_t i = 0; i < ws.size(); ++i) {
          json t = json::array();
          for (const auto& term : ctx.transition(ws[i])) t.push_back(io::to_json(term));
          rows[i]["pbw_expansion"] = t;
        }
      return json{{"setting", canonical_src.setting}, {"bound", canonical_bound}, {"elements", rows}};
    };
  });

  // tsystem
  auto* tsystem_cmd = app.add_subcommand("tsystem", "cluster T-system checks");
  SeedSource tsystem_src;
  int tsystem_k = 0;
  tsystem_src.add_to(tsystem_cmd, false);
  tsystem_cmd->add_option("--k", tsystem_k, "vertex (default: all)");
  tsystem_cmd->callback([&] {
    action = [&] {
      Quiver q = tsystem_src.quiver();
      json reports = json::array();
      bool ok = true;
      for (int k = 1; k <= q.size(); ++k) {
        if (tsystem_k && k != tsystem_k) continue;
        TSystemReport r = verify_cluster_tsystem(q, k);
        ok = ok && r.passed();
        reports.push_back(io::to_json(r));
      }
      if (tsystem_k && reports.empty()) throw Error("invalid_vertex", "k out of range");
      LPermutationReport lp = check_l_permutation(q);
      if (!ok || !lp.passed()) exit_override = 1;
      return json{{"reports", reports}, {"l_permutation", io::to_json(lp)}, {"passed", ok && lp.passed()}};
    };
  });

  // positivity
  auto* positivity_cmd = app.add_subcommand("positivity", "canonical elements and structure constants up to |w| <= N");
  SeedSource positivity_src;
  int positivity_bound = 4;
  positivity_src.add_to(positivity_cmd, false);
  positivity_cmd->add_option("--bound", positivity_bound, "largest |w|")->check(CLI::NonNegativeNumber);
  positivity_cmd->callback([&] {
    action = [&] {
      Quiver q = positivity_src.quiver();
      BasisContext ctx(q, io::parse_setting(positivity_src.setting));
      auto ws = level1_vectors(q.size(), positivity_bound);
      auto sc = structure_constants(ctx, ws, positivity_bound);
      json products = json::array();
      bool all_positive = true;
      for (const auto& s : sc) {
        products.push_back(io::to_json(s));
        all_positive = all_positive && s.positive;
      }
      return json{{"setting", positivity_src.setting},
                  {"bound", positivity_bound},
                  {"elements", basis_table(ctx, ws)},
                  {"products", products},
                  {"all_positive", all_positive}};
    };
  });

  // verify all
  auto* verify_cmd = app.add_subcommand("verify", "acceptance checks")->require_subcommand(1);
  auto* verify_all = verify_cmd->add_subcommand("all", "run the acceptance suite");
  std::string suite = "all";
  std::vector<int> only;
  std::uint64_t verify_seed = verify::AcceptanceOptions{}.rng_seed;
  verify_all->add_option("--suite", suite, "all, a2, a3, triangle");
  verify_all->add_option("--criteria", only, "run only these criteria")->delimiter(',');
  verify_all->add_option("--rng-seed", verify_seed, "seed for the randomized checks");
  verify_all->callback([&] {
    action = [&] {
      verify::AcceptanceOptions o;
      o.rng_seed = verify_seed;
      o.criteria = verify::suite_criteria(suite);
      if (!only.empty()) {
        std::set<int> keep;
        for (int c : only)
          if (o.criteria.count(c)) keep.insert(c);
        o.criteria = keep;
      }
      bool ok = true;
      verify::run_acceptance(o, [&](const verify::CriterionResult& r) {
        out << verify::format_line(r) << std::endl;
        ok = ok && r.passed;
      });
      exit_override = ok ? 0 : 1;
      return json();
    };
  });

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "HTTP session service");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve_cmd->callback([&] {
    action = [&] {
      exit_override = service::serve(host, port);
      return json();
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "qca 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'qca --help' for usage\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command\n";
    return 2;
  }
  try {
    json result = action();
    if (!result.is_null()) out << result.dump(indent) << "\n";
    return exit_override;
  } catch (const Error& e) {
    out << io::error_json(e.code(), e.what()).dump(indent) << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << io::error_json("internal", e.what()).dump(indent) << "\n";
    return 1;
  }
}

}  // namespace qca::cli
