#include "hypersurf/specio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hypersurf {

namespace {

// ---------------------------------------------------------------------------
// Minimal TOML reader, covering the subset tower documents use.

struct TomlParser {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  explicit TomlParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecError("TOML line " + std::to_string(line) + ": " + msg);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') ++line;
    ++pos;
  }

  void skip_ws_inline() {
    while (!done() && (peek() == ' ' || peek() == '\t')) advance();
  }

  void skip_ws_and_comments() {
    for (;;) {
      skip_ws_inline();
      if (done()) return;
      if (peek() == '#') {
        while (!done() && peek() != '\n') advance();
        continue;
      }
      if (peek() == '\n' || peek() == '\r') {
        advance();
        continue;
      }
      return;
    }
  }

  std::string bare_key() {
    skip_ws_inline();
    size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_' || peek() == '-'))
      advance();
    if (pos == start) fail("expected a key");
    return text.substr(start, pos - start);
  }

  std::string quoted_string() {
    advance();  // opening quote
    std::string out;
    while (!done() && peek() != '"') {
      if (peek() == '\n') fail("newline in string");
      out.push_back(peek());
      advance();
    }
    if (done()) fail("unterminated string");
    advance();  // closing quote
    return out;
  }

  Json value() {
    skip_ws_inline();
    if (done()) fail("expected a value");
    char c = peek();
    if (c == '"') return Json(quoted_string());
    if (c == '[') return array();
    if (c == '{') return inline_table();
    // bare scalar: integer or boolean
    size_t start = pos;
    while (!done() && peek() != ',' && peek() != ']' && peek() != '}' &&
           peek() != '\n' && peek() != '#' && peek() != ' ' && peek() != '\t' &&
           peek() != '\r')
      advance();
    std::string tok = text.substr(start, pos - start);
    if (tok == "true") return Json(true);
    if (tok == "false") return Json(false);
    try {
      return Json(std::stoll(tok));
    } catch (...) {
      fail("unsupported scalar '" + tok + "'");
    }
  }

  Json array() {
    advance();  // '['
    Json arr = Json::array();
    for (;;) {
      skip_ws_and_comments();
      if (done()) fail("unterminated array");
      if (peek() == ']') {
        advance();
        return arr;
      }
      arr.push_back(value());
      skip_ws_and_comments();
      if (!done() && peek() == ',') advance();
    }
  }

  Json inline_table() {
    advance();  // '{'
    Json obj = Json::object();
    skip_ws_inline();
    if (!done() && peek() == '}') {
      advance();
      return obj;
    }
    for (;;) {
      std::string key = bare_key();
      skip_ws_inline();
      if (done() || peek() != '=') fail("expected '=' in inline table");
      advance();
      obj[key] = value();
      skip_ws_inline();
      if (done()) fail("unterminated inline table");
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        return obj;
      }
      fail("expected ',' or '}' in inline table");
    }
  }

  // Path of dot-separated keys in a [header] or [[header]].
  std::vector<std::string> header_path() {
    std::vector<std::string> path;
    for (;;) {
      path.push_back(bare_key());
      skip_ws_inline();
      if (!done() && peek() == '.') {
        advance();
        continue;
      }
      return path;
    }
  }

  Json parse() {
    Json root = Json::object();
    Json* table = &root;
    while (true) {
      skip_ws_and_comments();
      if (done()) return root;
      if (peek() == '[') {
        advance();
        bool array_of_tables = !done() && peek() == '[';
        if (array_of_tables) advance();
        auto path = header_path();
        skip_ws_inline();
        if (done() || peek() != ']') fail("unterminated table header");
        advance();
        if (array_of_tables) {
          if (done() || peek() != ']') fail("expected ']]'");
          advance();
        }
        Json* cur = &root;
        for (size_t i = 0; i < path.size(); ++i) {
          const std::string& k = path[i];
          bool last = (i + 1 == path.size());
          if (last && array_of_tables) {
            if (!cur->contains(k)) (*cur)[k] = Json::array();
            (*cur)[k].push_back(Json::object());
            cur = &(*cur)[k].back();
          } else {
            if (!cur->contains(k)) (*cur)[k] = Json::object();
            Json& next = (*cur)[k];
            cur = next.is_array() ? &next.back() : &next;
          }
        }
        table = cur;
        continue;
      }
      std::string key = bare_key();
      skip_ws_inline();
      if (done() || peek() != '=') fail("expected '=' after key '" + key + "'");
      advance();
      (*table)[key] = value();
      skip_ws_inline();
      if (!done() && peek() == '#')
        while (!done() && peek() != '\n') advance();
    }
  }
};

// ---------------------------------------------------------------------------

CurveGeom curve_from_json(BaseKind base, const Json& j) {
  if (!j.contains("geom")) throw SpecError("curve entry without 'geom'");
  std::string geom = j["geom"].get<std::string>();
  auto param_str = [&]() -> std::string {
    if (!j.contains("param")) throw SpecError(geom + " needs a 'param' field");
    const Json& p = j["param"];
    if (p.is_string()) return p.get<std::string>();
    if (p.is_number_integer()) return std::to_string(p.get<long long>());
    throw SpecError(geom + ": unsupported param type");
  };
  if (geom == "FIBER_H") return CurveGeom::fiber_h(parse_p1(param_str()));
  if (geom == "FIBER_V") return CurveGeom::fiber_v(parse_p1(param_str()));
  if (geom == "DIAGONAL") return CurveGeom::diagonal(parse_gauss(param_str()));
  if (geom == "ANTIDIAGONAL") return CurveGeom::antidiagonal(parse_gauss(param_str()));
  if (geom == "CONIC") return CurveGeom::conic();
  if (geom.rfind("CUBOID_C", 0) == 0 && geom.size() == 9)
    return CurveGeom::cuboid_c(geom[8] - '0');
  if (geom == "LINE_TANGENT") {
    std::string p = param_str();
    auto colon = p.find(':');
    if (colon == std::string::npos) return CurveGeom::tangent_line(parse_p1(p));
    GaussRat t = parse_gauss(p.substr(0, colon));
    GaussRat u = parse_gauss(p.substr(colon + 1));
    return CurveGeom::tangent_line(P1Point(t, u));
  }
  (void)base;
  throw SpecError("unknown curve geometry '" + geom + "'");
}

}  // namespace

Json toml_to_json(const std::string& text) { return TomlParser(text).parse(); }

TowerSpec parse_tower_spec(const std::string& text, const std::string& path_hint) {
  Json j;
  bool looks_json = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    looks_json = (c == '{');
    break;
  }
  if (path_hint.size() >= 5 && path_hint.substr(path_hint.size() - 5) == ".json")
    looks_json = true;
  if (looks_json) {
    j = Json::parse(text, nullptr, true, true);
  } else {
    j = toml_to_json(text);
  }

  TowerSpec spec;
  if (!j.contains("base")) throw SpecError("spec needs a 'base' field");
  std::string base = j["base"].get<std::string>();
  if (base == "P2") spec.base = BaseKind::P2;
  else if (base == "P1xP1") spec.base = BaseKind::P1xP1;
  else throw SpecError("base must be \"P2\" or \"P1xP1\", got \"" + base + "\"");

  if (!j.contains("omega")) throw SpecError("spec needs an 'omega' field");
  spec.omega = omega_from_name(j["omega"].get<std::string>());

  if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
    throw SpecError("spec needs a nonempty 'levels' array");
  for (const Json& jl : j["levels"]) {
    LevelSpec lv;
    if (!jl.contains("m")) throw SpecError("level without 'm'");
    lv.m = jl["m"].is_string() ? Int(jl["m"].get<std::string>())
                               : Int(jl["m"].get<long long>());
    if (!jl.contains("curves") || !jl["curves"].is_array())
      throw SpecError("level without a 'curves' array");
    for (const Json& jc : jl["curves"]) {
      Int a{1};
      if (jc.contains("a"))
        a = jc["a"].is_string() ? Int(jc["a"].get<std::string>())
                                : Int(jc["a"].get<long long>());
      lv.curves.push_back({curve_from_json(spec.base, jc), a});
    }
    spec.levels.push_back(std::move(lv));
  }
  return spec;
}

TowerSpec load_tower_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tower_spec(buf.str(), path);
}

namespace {

Json curve_json(const CurveGeom& g, const Int& a) {
  Json j = Json::object();
  switch (g.kind) {
    case GeomKind::FiberH:
      j["geom"] = "FIBER_H";
      j["param"] = g.param.str();
      break;
    case GeomKind::FiberV:
      j["geom"] = "FIBER_V";
      j["param"] = g.param.str();
      break;
    case GeomKind::TangentLine:
      j["geom"] = "LINE_TANGENT";
      j["param"] = g.param.str();
      break;
    case GeomKind::Conic:
      j["geom"] = "CONIC";
      break;
    case GeomKind::Graph11: {
      // labels look like DIAGONAL(c), ANTIDIAGONAL(c), CUBOID_Ci
      auto paren = g.label.find('(');
      if (paren == std::string::npos) {
        j["geom"] = g.label;
      } else {
        j["geom"] = g.label.substr(0, paren);
        j["param"] = g.label.substr(paren + 1, g.label.size() - paren - 2);
      }
      break;
    }
  }
  j["a"] = a.convert_to<long long>();
  return j;
}

}  // namespace

Json tower_spec_json(const TowerSpec& spec) {
  Json j = Json::object();
  j["base"] = base_name(spec.base);
  j["omega"] = omega_name(spec.omega);
  j["levels"] = Json::array();
  for (const auto& lv : spec.levels) {
    Json jl = Json::object();
    jl["m"] = lv.m.convert_to<long long>();
    jl["curves"] = Json::array();
    for (const auto& bc : lv.curves) jl["curves"].push_back(curve_json(bc.geom, bc.a));
    j["levels"].push_back(std::move(jl));
  }
  return j;
}

Json resolution_json(const ResolutionData& data) {
  Json j = Json::object();
  j["m"] = data.sing.m.str();
  j["q"] = data.sing.q.str();
  j["b"] = Json::array();
  for (const auto& x : data.b) j["b"].push_back(x.str());
  j["alpha"] = Json::array();
  for (const auto& x : data.alpha) j["alpha"].push_back(x.str());
  j["beta"] = Json::array();
  for (const auto& x : data.beta) j["beta"].push_back(x.str());
  j["gamma"] = Json::array();
  for (const auto& x : data.gamma) j["gamma"].push_back(x.str());
  j["discrepancies"] = Json::array();
  for (const auto& d : data.discrepancies)
    j["discrepancies"].push_back(rat_to_string(d));
  return j;
}

Json node_inventory_json(const Tower& t) {
  Json arr = Json::array();
  for (const auto& r : node_inventory(t)) {
    Json j = Json::object();
    j["kind"] = r.kind == NodeRecord::Kind::BranchNode ? "branch_node" : "integral_contact";
    j["levels"] = Json::array({r.level_lo, r.level_hi});
    j["mults"] = Json::array({r.a_u.str(), r.a_v.str()});
    j["tangency"] = r.tangency;
    j["count"] = r.count.str();
    j["singularity_producing"] = r.singularity_producing;
    j["on_curves"] = r.on_curves;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json singularity_inventory_json(const Tower& t) {
  Json arr = Json::array();
  for (const auto& [type, count] : singularity_inventory(t)) {
    Json j = Json::object();
    j["type"] = type.str();
    j["count"] = count.str();
    arr.push_back(std::move(j));
  }
  return arr;
}

Json ramification_json(const RamificationReport& rep) {
  Json j = Json::object();
  j["all_crepant"] = rep.all_crepant;
  j["levels"] = Json::array();
  for (const auto& lvl : rep.levels) {
    Json jl = Json::object();
    jl["level"] = lvl.level;
    jl["m"] = lvl.m.str();
    jl["reduced_class"] = lvl.reduced_class.str();
    jl["crepant"] = lvl.crepant;
    jl["entries"] = Json::array();
    for (const auto& e : lvl.entries) {
      Json je = Json::object();
      je["type"] = e.type.str();
      je["nodes"] = e.node_count.str();
      Json coeffs = Json::array();
      for (const auto& c : e.exceptional_coeffs) coeffs.push_back(rat_to_string(c));
      je["exceptional_coefficients"] = std::move(coeffs);
      jl["entries"].push_back(std::move(je));
    }
    j["levels"].push_back(std::move(jl));
  }
  return j;
}

namespace {

Json traced_json(const TracedCurve& c) {
  Json j = Json::object();
  j["geom"] = c.geom.label;
  if (c.branch_level > 0) j["branch_level"] = c.branch_level;
  if (c.generic_representative) j["generic_representative"] = true;
  if (c.manual) {
    j["manual"] = true;
    j["reason"] = c.manual_reason;
  } else {
    j["components"] = c.components.str();
    j["genus"] = c.genus.str();
  }
  return j;
}

}  // namespace

Json verdict_json(const Verdict& v) {
  Json j = Json::object();
  j["kind"] = verdict_name(v.kind);
  Json checks = Json::object();
  checks["multiplicity_ok"] = v.checks.multiplicity_ok;
  checks["snc_ok"] = v.checks.snc_ok;
  checks["ampleness_ok"] = v.checks.ampleness_ok;
  checks["vanishing_ok"] = v.checks.vanishing_ok;
  checks["multiplicity_witnesses"] = v.checks.multiplicity_witnesses;
  checks["rescued_pairs"] = v.checks.rescued_pairs;
  checks["snc_witnesses"] = v.checks.snc_witnesses;
  checks["vanishing_witnesses"] = v.checks.vanishing_witnesses;
  j["checks"] = std::move(checks);
  j["criterion_class"] = v.checks.criterion_class.str();
  j["curves"] = Json::array();
  for (const auto& c : v.curves) j["curves"].push_back(traced_json(c));
  j["exceptional_locus"] = Json::array();
  for (const auto& c : v.exceptional_locus)
    j["exceptional_locus"].push_back(traced_json(c));
  j["notes"] = v.notes;
  return j;
}

Json invariants_json(const Tower& t, const std::vector<LevelInvariants>& inv) {
  Json j = Json::object();
  j["base"] = base_name(t.spec.base);
  j["total_degree"] = t.total_degree.str();
  j["floors"] = Json::array();
  for (const auto& lv : inv) {
    Json f = Json::object();
    f["floor"] = lv.level;
    f["chi"] = rat_to_string(lv.chi);
    f["K2"] = rat_to_string(lv.k2);
    f["K_class"] = lv.K_class.str();
    f["D_sq"] = rat_to_string(lv.D_sq);
    f["D_dot_K"] = rat_to_string(lv.D_dot_K);
    if (lv.has_branch_genus) f["branch_component_genus"] = lv.branch_component_genus.str();
    f["K_ample"] = lv.k_ample;
    j["floors"].push_back(std::move(f));
  }
  return j;
}

std::string invariants_table(const std::vector<LevelInvariants>& inv) {
  std::ostringstream os;
  os << "floor  chi        K^2        K class          D^2        D.K        g(branch)  K ample\n";
  for (const auto& lv : inv) {
    auto col = [&](const std::string& s, size_t w) {
      os << s;
      for (size_t i = s.size(); i < w; ++i) os << ' ';
    };
    col(std::to_string(lv.level), 7);
    col(rat_to_string(lv.chi), 11);
    col(rat_to_string(lv.k2), 11);
    col(lv.K_class.str(), 17);
    col(rat_to_string(lv.D_sq), 11);
    col(rat_to_string(lv.D_dot_K), 11);
    col(lv.has_branch_genus ? lv.branch_component_genus.str() : "-", 11);
    os << (lv.k_ample ? "yes" : "no") << "\n";
  }
  return os.str();
}

namespace {

std::string ambient_str(const Ambient& a) {
  if (a.kind == Ambient::Kind::WeightedP111R) return "P(1,1,1," + a.weight.str() + ")";
  return "P" + std::to_string(a.dim);
}

std::string equation_text(const EquationSet& es, const Equation& eq) {
  std::vector<std::string> pv(es.variables.begin(),
                              es.variables.begin() + es.product_vars);
  std::ostringstream os;
  os << eq.expanded.str(pv);
  if (!eq.perturbation_symbol.empty())
    os << " + " << eq.perturbation_symbol << "*" << eq.perturbation.str(pv);
  if (eq.rhs_var >= 0)
    os << " = " << es.variables[eq.rhs_var] << "^" << eq.rhs_power.str();
  else
    os << " = 0";
  return os.str();
}

}  // namespace

Json equation_set_json(const EquationSet& es) {
  Json j = Json::object();
  j["family"] = es.family;
  j["ambient"] = ambient_str(es.ambient);
  j["multidegree"] = Json::array();
  for (const auto& d : es.requested_degrees) j["multidegree"].push_back(d.str());
  j["variables"] = es.variables;
  std::vector<std::string> pv(es.variables.begin(),
                              es.variables.begin() + es.product_vars);
  j["equations"] = Json::array();
  for (const auto& eq : es.equations) {
    Json je = Json::object();
    je["degree"] = eq.degree.str();
    if (eq.is_quadric) je["quadric"] = true;
    Json coeffs = Json::object();
    for (const auto& [e, c] : eq.expanded.terms) {
      std::ostringstream mono;
      bool any = false;
      for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (any) mono << "*";
        mono << pv[v];
        if (e[v] > 1) mono << "^" << e[v];
        any = true;
      }
      coeffs[any ? mono.str() : "1"] = c.str();
    }
    je["coefficients"] = std::move(coeffs);
    if (!eq.perturbation_symbol.empty()) {
      je["perturbation"] = Json::object();
      je["perturbation"]["symbol"] = eq.perturbation_symbol;
      je["perturbation"]["monomial"] = eq.perturbation.str(pv);
    }
    if (eq.rhs_var >= 0) {
      je["root"] = Json::object();
      je["root"]["variable"] = es.variables[eq.rhs_var];
      je["root"]["power"] = eq.rhs_power.str();
    }
    je["text"] = equation_text(es, eq);
    j["equations"].push_back(std::move(je));
  }
  j["constraints"] = Json::array();
  for (const auto& c : es.constraints) {
    Json jc = Json::object();
    jc["kind"] = c.kind == Constraint::Kind::AllDistinct ? "all_distinct" : "avoid_values";
    jc["label"] = c.label;
    Json vals = Json::array();
    for (const auto& v : c.values) vals.push_back(rat_to_string(v));
    jc["values"] = std::move(vals);
    if (!c.forbidden.empty()) {
      Json f = Json::array();
      for (const auto& v : c.forbidden) f.push_back(rat_to_string(v));
      jc["forbidden"] = std::move(f);
    }
    j["constraints"].push_back(std::move(jc));
  }
  j["tower"] = tower_spec_json(es.tower);
  return j;
}

std::string equation_set_text(const EquationSet& es) {
  std::ostringstream os;
  os << "# " << es.family << " in " << ambient_str(es.ambient) << "\n";
  for (const auto& eq : es.equations) os << equation_text(es, eq) << "\n";
  return os.str();
}

Json classification_json(const Classification& cls) {
  Json j = Json::object();
  j["primary"] = family_name(cls.primary());
  j["routes"] = Json::array();
  for (const auto& r : cls.routes) {
    Json jr = Json::object();
    jr["kind"] = family_name(r.kind);
    jr["route"] = r.route;
    j["routes"].push_back(std::move(jr));
  }
  if (!cls.note.empty()) j["note"] = cls.note;
  return j;
}

}  // namespace hypersurf
