#include "json_io.hpp"

#include <sstream>

namespace qca::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("invalid_json", what); }

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

Int int_from(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  bad("expected an integer or a decimal string");
}

}  // namespace

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t r = j.size(), c = r ? j[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) bad("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from(j[i][k]);
  }
  return m;
}

static json arrows_json(const std::vector<Arrow>& arrows) {
  json a = json::array();
  for (const auto& x : arrows) a.push_back({x.source, x.target});
  return a;
}

json to_json(const Quiver& q) {
  return {{"n", q.size()}, {"m", q.size()}, {"arrows", arrows_json(q.arrows())}, {"frozen_from", nullptr}};
}

json to_json(const IceQuiver& q) {
  json fz = q.total() > q.mutable_count() ? json(q.mutable_count() + 1) : json(nullptr);
  return {{"n", q.mutable_count()}, {"m", q.total()}, {"arrows", arrows_json(q.arrows())}, {"frozen_from", fz}};
}

Quiver quiver_from_json(const json& j) {
  if (!j.is_object()) bad("quiver must be an object");
  const int n = get_int(j, "n");
  if (j.contains("m") && !j["m"].is_null() && j["m"].get<int>() != n)
    bad("expected a quiver without frozen vertices (m == n)");
  if (j.contains("frozen_from") && !j["frozen_from"].is_null() && j["frozen_from"].get<int>() <= n)
    bad("frozen vertices are not allowed in a principal quiver");
  if (!j.contains("arrows") || !j["arrows"].is_array()) bad("missing 'arrows'");
  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      bad("arrows must be [source, target] pairs");
    arrows.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return Quiver(n, arrows);
}

json to_json(const VPoly& p) {
  json c = json::array();
  for (const auto& [k, v] : p.terms()) c.push_back({k, v.get_str()});
  return c;
}

VPoly vpoly_from_json(const json& j) {
  if (!j.is_array()) bad("coefficient must be a list of [power, value]");
  VPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) bad("coefficient term must be [power, value]");
    p.add_term(t[0].get<int>(), int_from(t[1]));
  }
  return p;
}

json to_json(const TorusElement& x) {
  json out = json::array();
  for (const auto& [g, c] : x.terms()) out.push_back({{"exp", g}, {"coeff", to_json(c)}});
  return out;
}

TorusElement torus_from_json(const json& j, int rank) {
  if (!j.is_array()) bad("torus element must be an array of terms");
  TorusElement x(rank);
  for (const auto& t : j) {
    if (!t.contains("exp") || !t.contains("coeff")) bad("term needs 'exp' and 'coeff'");
    Exponent g = t["exp"].get<Exponent>();
    if (static_cast<int>(g.size()) != rank) bad("exponent has the wrong length");
    x.add_term(g, vpoly_from_json(t["coeff"]));
  }
  return x;
}

json to_json(const GradedVector& g) {
  json e = json::array();
  for (const auto& [k, v] : g.entries()) {
    if (k.deg2 % 2 != 0) throw Error("invalid_degree", "half-integer degree in an integer-degree vector");
    e.push_back({k.vertex, k.deg2 / 2, v});
  }
  return {{"entries", e}};
}

json to_json(const WVector& w) { return to_json(w.graded()); }

WVector wvector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) bad("WVector needs 'entries'");
  GradedVector g;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) bad("WVector entry must be [vertex, degree, value]");
    g.add(e[0].get<int>(), 2 * e[1].get<int>(), e[2].get<long long>());
  }
  return WVector(g);
}

WVector parse_wvector(const std::string& text) {
  GradedVector g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = 0, a = 0;
    long long v = 0;
    char c1 = 0, c2 = 0;
    std::stringstream is(item);
    if (!(is >> i >> c1 >> a >> c2 >> v) || c1 != ':' || c2 != ':')
      throw Error("invalid_argument", "w entries must look like vertex:degree:value, got '" + item + "'");
    g.add(i, 2 * a, v);
  }
  return WVector(g);
}

json to_json(const YPolynomial& y) {
  json out = json::array();
  for (const auto& [k, c] : y.terms()) out.push_back({{"w", to_json(k)["entries"]}, {"t_half_coeff", to_json(c)}});
  return out;
}

json to_json(const RationalRep& m) {
  json mats = json::object();
  for (std::size_t k = 0; k < m.quiver.arrows().size(); ++k) {
    const auto& a = m.quiver.arrows()[k];
    json rows = json::array();
    for (std::size_t i = 0; i < m.maps[k].rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.maps[k].cols(); ++j) row.push_back(m.maps[k](i, j).get_str());
      rows.push_back(row);
    }
    std::string key = std::to_string(a.source) + "->" + std::to_string(a.target);
    // parallel arrows get a numbered suffix
    int dup = 0;
    while (mats.contains(dup ? key + "#" + std::to_string(dup) : key)) ++dup;
    mats[dup ? key + "#" + std::to_string(dup) : key] = rows;
  }
  return {{"field", "Q"}, {"dims", m.dims}, {"mats", mats}};
}

RationalRep rep_from_json(const json& j, const Quiver& q) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("mats")) bad("representation needs 'dims' and 'mats'");
  if (j.contains("field") && !(j["field"].is_string() && j["field"] == "Q"))
    bad("only representations over Q can be loaded");
  RationalRep m;
  m.quiver = q;
  m.dims = j["dims"].get<std::vector<int>>();
  if (static_cast<int>(m.dims.size()) != q.size()) bad("dims has the wrong length");
  std::map<std::string, int> seen;
  for (const auto& a : q.arrows()) {
    std::string key = std::to_string(a.source) + "->" + std::to_string(a.target);
    int dup = seen[key]++;
    if (dup) key += "#" + std::to_string(dup);
    DenseMatrix<RationalField> mat({}, m.dims[a.source - 1], m.dims[a.target - 1]);
    if (j["mats"].contains(key)) {
      const json& rows = j["mats"][key];
      if (rows.size() != mat.rows()) bad("matrix for " + key + " has the wrong shape");
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        if (rows[r].size() != mat.cols()) bad("matrix for " + key + " has the wrong shape");
        for (std::size_t c = 0; c < mat.cols(); ++c)
          mat(r, c) = rows[r][c].is_string() ? Rat(rows[r][c].get<std::string>()) : Rat(rows[r][c].get<long>());
      }
    } else if (mat.rows() && mat.cols()) {
      bad("missing matrix for arrow " + key);
    }
    m.maps.push_back(std::move(mat));
  }
  m.validate();
  return m;
}

json to_json(const K0Class& c) {
  json out = json::array();
  for (const auto& x : c.coords()) out.push_back(x.get_str());
  return out;
}

Setting parse_setting(const std::string& s) {
  if (s == "E" || s == "E'") return Setting::EPrime;
  if (s == "L") return Setting::L;
  throw Error("invalid_argument", "setting must be E or L");
}

std::string setting_name(Setting s) { return s == Setting::EPrime ? "E" : "L"; }

QuantumSeed initial_seed_for(const SeedConfig& c) {
  if (c.level < 1) throw Error("invalid_argument", "level must be positive");
  if (c.setting == Setting::L) {
    if (c.level != 1) throw Error("invalid_argument", "the L setting is defined at level 1 only");
    return setting_seed(c.quiver, Setting::L);
  }
  IceQuiver iq = build_z(c.quiver, c.level);
  return initial_seed(lambda_z(iq), b_matrix(iq));
}

json config_to_json(const SeedConfig& c) {
  return {{"quiver", to_json(c.quiver)}, {"level", c.level}, {"setting", setting_name(c.setting)}};
}

SeedConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("quiver")) bad("config needs 'quiver'");
  SeedConfig c;
  c.quiver = quiver_from_json(j["quiver"]);
  if (j.contains("level")) {
    if (!j["level"].is_number_integer()) bad("level must be an integer");
    c.level = j["level"].get<int>();
  }
  if (j.contains("setting")) {
    if (!j["setting"].is_string()) bad("setting must be a string");
    c.setting = parse_setting(j["setting"].get<std::string>());
  }
  return c;
}

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_number_integer())
    throw Error("schema_version", "missing schema version");
  int v = j["schema"].get<int>();
  if (v != kSchemaVersion)
    throw Error("schema_version", "unsupported schema version " + std::to_string(v) + " (this build reads " +
                                      std::to_string(kSchemaVersion) + ")");
}

json seed_to_json(const SeedConfig& c, const QuantumSeed& s) {
  json vars = json::array();
  for (const auto& x : s.vars) vars.push_back(to_json(x));
  return {{"schema", kSchemaVersion}, {"config", config_to_json(c)}, {"history", s.history},
          {"lambda", to_json(s.lambda)},   {"b_tilde", to_json(s.b)},       {"variables", vars}};
}

std::pair<SeedConfig, QuantumSeed> seed_from_json(const json& j) {
  check_schema(j);
  if (!j.contains("config")) bad("seed needs 'config'");
  SeedConfig c = config_from_json(j["config"]);
  std::vector<int> word = j.value("history", std::vector<int>{});
  QuantumSeed s = mutate_word(initial_seed_for(c), word);
  if (j.contains("lambda") && matrix_from_json(j["lambda"]) != s.lambda)
    throw Error("inconsistent_snapshot", "stored lambda does not match the replayed seed");
  if (j.contains("b_tilde") && matrix_from_json(j["b_tilde"]) != s.b)
    throw Error("inconsistent_snapshot", "stored exchange matrix does not match the replayed seed");
  if (j.contains("variables")) {
    const json& vars = j["variables"];
    if (vars.size() != s.vars.size()) throw Error("inconsistent_snapshot", "wrong number of variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (torus_from_json(vars[i], s.total()) != s.vars[i])
        throw Error("inconsistent_snapshot", "stored variable " + std::to_string(i + 1) + " does not match");
  }
  return {c, s};
}

json to_json(const GVector& g) { return {{"g", g.g}, {"coeff", to_json(g.coefficient)}}; }

json to_json(const ExplorationGraph& g) {
  json nodes = json::array(), edges = json::array(), vars = json::array();
  for (const auto& s : g.nodes) nodes.push_back({{"history", s.history}});
  for (const auto& e : g.edges) edges.push_back({e.from, e.k, e.to});
  for (const auto& x : g.variables) vars.push_back(to_json(x));
  return {{"nodes", nodes},
          {"edges", edges},
          {"variables", vars},
          {"clusters", g.nodes.size()},
          {"closed", g.closed},
          {"depth_reached", g.depth_reached}};
}

json to_json(const TSystemReport& r) {
  return {{"k", r.k},
          {"passed", r.passed()},
          {"l_frozen", r.l_frozen},
          {"l_product", r.l_product},
          {"literal", r.literal},
          {"rescaled_literal", r.rescaled_literal},
          {"rescaled_normalized", r.rescaled_normalized},
          {"l_plus_two", r.l_plus_two},
          {"classical", r.classical},
          {"frozen_pairing", r.frozen_pairing},
          {"frozen_pairing_minus", r.frozen_pairing_minus},
          {"beta_balance", r.beta_balance},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.normalized_rhs)}};
}

json to_json(const LPermutationReport& r) {
  return {{"passed", r.passed()},
          {"solvable", r.solvable},
          {"prescribed", r.prescribed},
          {"mismatched", r.mismatched},
          {"l_tilde", to_json(r.l_tilde)}};
}

json to_json(const BasisContext::Term& t) { return {{"w", to_json(t.u)}, {"coeff", to_json(t.c)}}; }

json to_json(const StructureConstant& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return {{"left", to_json(s.left)}, {"right", to_json(s.right)}, {"terms", terms}, {"positive", s.positive}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace qca::io
