#include "hypersurf/certify.hpp"
#include "hypersurf/genfam.hpp"
#include "hypersurf/invariants.hpp"
#include "hypersurf/specio.hpp"

#include "verify_paper.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hypersurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;
constexpr int kExitConsistency = 3;

std::vector<Int> parse_degrees(const std::string& csv) {
  std::vector<Int> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(Int(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(Int(cur));
  if (out.empty()) throw DomainError("empty multidegree");
  return out;
}

void emit(const Json& j, const std::string& format, const std::string& text_form) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_form;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(v.kind) << "\n";
  os << "criterion class: " << v.checks.criterion_class.str()
     << (v.checks.ampleness_ok ? " (Q-ample)" : " (not Q-ample)") << "\n";
  os << "checks: multiplicity=" << (v.checks.multiplicity_ok ? "ok" : "FAIL")
     << " snc=" << (v.checks.snc_ok ? "ok" : "FAIL")
     << " ampleness=" << (v.checks.ampleness_ok ? "ok" : "FAIL")
     << " vanishing=" << (v.checks.vanishing_ok ? "ok" : "FAIL") << "\n";
  for (const auto& w : v.checks.multiplicity_witnesses) os << "  witness: " << w << "\n";
  for (const auto& w : v.checks.snc_witnesses) os << "  witness: " << w << "\n";
  for (const auto& w : v.checks.vanishing_witnesses) os << "  witness: " << w << "\n";
  os << "curves:\n";
  for (const auto& c : v.curves) {
    os << "  " << c.geom.label;
    if (c.manual)
      os << ": MANUAL (" << c.manual_reason << ")";
    else
      os << ": components=" << c.components.str() << " genus=" << c.genus.str();
    if (c.branch_level > 0) os << " [branch, level " << c.branch_level << "]";
    if (c.generic_representative) os << " [generic member]";
    os << "\n";
  }
  if (!v.exceptional_locus.empty()) {
    os << "exceptional locus:\n";
    for (const auto& c : v.exceptional_locus)
      os << "  " << c.geom.label << " (genus " << c.genus.str() << ")\n";
  }
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for towers of cyclic covers"};
  app.require_subcommand(1);
  app.fallthrough();  // --output may follow the subcommand
  std::string format = "json";
  app.add_option("--output,--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  long long seed = 0;
  app.add_option("--seed", seed,
                 "reserved; emitted families are deterministic")->group("");

  // hj m q
  auto* hj = app.add_subcommand("hj", "resolution data of 1/m(1,q)");
  long long hj_m = 0, hj_q = 0;
  hj->add_option("m", hj_m, "order of the quotient")->required();
  hj->add_option("q", hj_q, "weight, 0 < q < m, coprime to m")->required();

  // tower-check --spec file
  auto* tower_check = app.add_subcommand("tower-check", "validate a tower and report the verdict");
  std::string tc_spec;
  tower_check->add_option("--spec", tc_spec, "tower document (TOML or JSON)")->required();

  // invariants --spec file
  auto* invars = app.add_subcommand("invariants", "per-floor numerical invariants");
  std::string inv_spec;
  invars->add_option("--spec", inv_spec, "tower document (TOML or JSON)")->required();

  // classify --degrees a,b,c
  auto* classify = app.add_subcommand("classify", "match a multidegree against the covered patterns");
  std::string cls_degrees;
  classify->add_option("--degrees", cls_degrees, "comma-separated multidegree")->required();

  // generate --degrees a,b,c | --tangent-lines d --cover-degree m
  auto* generate = app.add_subcommand("generate", "emit an explicit family of equations");
  std::string gen_degrees;
  int gen_lines = 0;
  long long gen_cover = 0;
  generate->add_option("--degrees", gen_degrees, "comma-separated multidegree");
  generate->add_option("--tangent-lines", gen_lines,
                       "emit the weighted hypersurface over d tangent lines");
  generate->add_option("--cover-degree", gen_cover,
                       "cover degree for --tangent-lines (m | d)");

  auto* verify = app.add_subcommand("verify-paper", "re-derive the reference constants");
  (void)verify;

  CLI11_PARSE(app, argc, argv);

  try {
    if (hj->parsed()) {
      ResolutionData data = resolution_data(SingularityType(hj_m, hj_q));
      std::ostringstream text;
      text << "1/" << hj_m << "(1," << hj_q << "): b = [";
      for (size_t i = 0; i < data.b.size(); ++i)
        text << (i ? "," : "") << data.b[i].str();
      text << "], discrepancies = [";
      for (size_t i = 0; i < data.discrepancies.size(); ++i)
        text << (i ? "," : "") << rat_to_string(data.discrepancies[i]);
      text << "]\n";
      emit(resolution_json(data), format, text.str());
      return kExitOk;
    }

    if (tower_check->parsed()) {
      TowerSpec spec = load_tower_spec(tc_spec);
      Tower t = build_tower(spec);
      Verdict v = verdict(t);
      Json j = Json::object();
      j["spec"] = tower_spec_json(spec);
      j["total_degree"] = t.total_degree.str();
      if (t.snc_violations.empty()) {
        j["nodes"] = node_inventory_json(t);
        j["singularities"] = singularity_inventory_json(t);
        j["ramification"] = ramification_json(ramification_decomposition(t));
      }
      j["verdict"] = verdict_json(v);
      emit(j, format, verdict_text(v));
      return kExitOk;
    }

    if (invars->parsed()) {
      Tower t = build_tower(load_tower_spec(inv_spec));
      auto inv = level_invariants(t);
      emit(invariants_json(t, inv), format, invariants_table(inv));
      return kExitOk;
    }

    if (classify->parsed()) {
      Classification cls = classify_multidegree(parse_degrees(cls_degrees));
      std::ostringstream text;
      text << family_name(cls.primary());
      for (size_t i = 1; i < cls.routes.size(); ++i)
        text << " (also " << family_name(cls.routes[i].kind) << ")";
      if (!cls.note.empty()) text << "  -- " << cls.note;
      text << "\n";
      emit(classification_json(cls), format, text.str());
      return kExitOk;
    }

    if (generate->parsed()) {
      EquationSet es;
      if (gen_lines > 0) {
        if (gen_cover < 2) throw DomainError("--tangent-lines needs --cover-degree m >= 2");
        es = instantiate_weighted_lines(gen_lines, Int(gen_cover));
      } else if (!gen_degrees.empty()) {
        auto degrees = parse_degrees(gen_degrees);
        Classification cls = classify_multidegree(degrees);
        if (cls.primary() == FamilyKind::NotCovered) {
          std::cerr << "multidegree not covered"
                    << (cls.note.empty() ? "" : (": " + cls.note)) << "\n";
          return kExitSpec;
        }
        es = instantiate_family(cls.primary(), degrees);
      } else {
        throw DomainError("generate needs --degrees or --tangent-lines");
      }
      ValidationReport rep = validate_family(es);
      if (!rep.ok) {
        for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
        return kExitConsistency;
      }
      emit(equation_set_json(es), format, equation_set_text(es));
      return kExitOk;
    }

    if (verify->parsed()) {
      int failures = run_verify_paper(std::cout);
      return failures == 0 ? kExitOk : kExitConsistency;
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  }
  return kExitOk;
}
