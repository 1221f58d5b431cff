#include <doctest.h>

#include "hypersurf/specio.hpp"

using namespace hypersurf;

namespace {

const char* kCuboidToml = R"(
# three double covers
base = "P1xP1"
omega = "FIBER_22"

[[levels]]
m = 2
curves = [
  { geom = "FIBER_H", param = "1",  a = 1 },
  { geom = "FIBER_H", param = "-1", a = 1 },
  { geom = "FIBER_V", param = "1",  a = 1 },
  { geom = "FIBER_V", param = "-1", a = 1 },
]

[[levels]]
m = 2
curves = [
  { geom = "FIBER_H", param = "i",  a = 1 },
  { geom = "FIBER_H", param = "-i", a = 1 },
  { geom = "FIBER_V", param = "i",  a = 1 },
  { geom = "FIBER_V", param = "-i", a = 1 },
]

[[levels]]
m = 2
curves = [
  { geom = "FIBER_H", param = "0",   a = 1 },
  { geom = "FIBER_H", param = "inf", a = 1 },
  { geom = "FIBER_V", param = "0",   a = 1 },
  { geom = "FIBER_V", param = "inf", a = 1 },
]
)";

}  // namespace

TEST_CASE("TOML subset round-trips a cuboid document") {
  TowerSpec spec = parse_tower_spec(kCuboidToml);
  CHECK(spec.base == BaseKind::P1xP1);
  CHECK(spec.omega == OmegaId::Fiber22);
  REQUIRE(spec.levels.size() == 3);
  for (const auto& lv : spec.levels) {
    CHECK(lv.m == 2);
    CHECK(lv.curves.size() == 4);
  }
  // identical to the built-in constructor
  TowerSpec ref = builtin::cuboid_tower();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(spec.levels[i].curves[j].geom.same_curve(ref.levels[i].curves[j].geom));
}

TEST_CASE("canonical JSON echo re-parses a diagonal-bearing spec") {
  TowerSpec spec;
  spec.base = BaseKind::P1xP1;
  spec.omega = OmegaId::FiberDiag44;
  LevelSpec lv;
  lv.m = 3;
  for (int p : {1, 2, 3}) {
    lv.curves.push_back({CurveGeom::fiber_h(P1Point::finite(GaussRat(Rat(p)))), 1});
    lv.curves.push_back({CurveGeom::fiber_v(P1Point::finite(GaussRat(Rat(p)))), 1});
  }
  LevelSpec lv2;
  lv2.m = 2;
  lv2.curves.push_back({CurveGeom::diagonal(GaussRat(Rat(5))), 1});
  lv2.curves.push_back({CurveGeom::antidiagonal(GaussRat(Rat(0))), 1});
  lv2.curves.push_back({CurveGeom::fiber_h(P1Point::finite(GaussRat(Rat(9)))), 1});
  lv2.curves.push_back({CurveGeom::fiber_v(P1Point::finite(GaussRat(Rat(9)))), 1});
  spec.levels = {lv, lv2};
  TowerSpec again = parse_tower_spec(tower_spec_json(spec).dump(), "echo.json");
  REQUIRE(again.levels.size() == 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < spec.levels[i].curves.size(); ++j)
      CHECK(again.levels[i].curves[j].geom.same_curve(spec.levels[i].curves[j].geom));
}

TEST_CASE("canonical JSON echo re-parses to the same spec") {
  TowerSpec spec = parse_tower_spec(kCuboidToml);
  Json echo = tower_spec_json(spec);
  TowerSpec again = parse_tower_spec(echo.dump(), "echo.json");
  REQUIRE(again.levels.size() == spec.levels.size());
  for (size_t i = 0; i < spec.levels.size(); ++i) {
    CHECK(again.levels[i].m == spec.levels[i].m);
    for (size_t j = 0; j < spec.levels[i].curves.size(); ++j)
      CHECK(again.levels[i].curves[j].geom.same_curve(spec.levels[i].curves[j].geom));
  }
}

TEST_CASE("spec errors carry context") {
  CHECK_THROWS_AS(parse_tower_spec("base = \"P3\"\nomega = \"FIBER_22\"\n"), SpecError);
  CHECK_THROWS_AS(parse_tower_spec("omega = \"FIBER_22\"\n"), SpecError);
  CHECK_THROWS_WITH_AS(parse_tower_spec("base = \"P1xP1\"\nomega = [broken\n"),
                       doctest::Contains("TOML line"), SpecError);
  CHECK_THROWS_AS(parse_tower_spec(R"({"base":"P1xP1","omega":"NOPE","levels":[]})",
                                   "x.json"),
                  SpecError);
}

TEST_CASE("resolution JSON serializes rationals as p/q strings") {
  Json j = resolution_json(resolution_data(SingularityType(7, 3)));
  CHECK(j["b"] == Json::array({"3", "2", "2"}));
  CHECK(j["discrepancies"] == Json::array({"-3/7", "-2/7", "-1/7"}));
}

TEST_CASE("verdict JSON carries checks and curves") {
  Verdict v = verdict(build_tower(builtin::tangent_lines_tower(15, 3)));
  Json j = verdict_json(v);
  CHECK(j["kind"] == "QUASI_HYPERBOLIC");
  CHECK(j["checks"]["ampleness_ok"] == true);
  CHECK(j["criterion_class"] == "(1)");
  CHECK(j["exceptional_locus"].size() == 15);
}

TEST_CASE("bundled documents load and certify as expected") {
  const std::string dir = HYPERSURF_SPEC_DIR;
  struct Row {
    const char* file;
    VerdictKind kind;
  };
  for (const Row& row : std::initializer_list<Row>{
           {"/cuboid.toml", VerdictKind::Inconclusive},
           {"/gencuboid-m3-n3.toml", VerdictKind::Hyperbolic},
           {"/lines15-m3.toml", VerdictKind::QuasiHyperbolic},
           {"/fam-a-n8.toml", VerdictKind::Hyperbolic}}) {
    CAPTURE(row.file);
    Tower t = build_tower(load_tower_spec(dir + row.file));
    CHECK(verdict(t).kind == row.kind);
  }

  // the FAM_A document matches the generator's branch data exactly
  TowerSpec from_file = load_tower_spec(dir + "/fam-a-n8.toml");
  EquationSet es = instantiate_family(FamilyKind::FamA, std::vector<Int>(8, Int(2)));
  REQUIRE(from_file.levels.size() == es.tower.levels.size());
  for (size_t i = 0; i < from_file.levels.size(); ++i) {
    REQUIRE(from_file.levels[i].curves.size() == es.tower.levels[i].curves.size());
    for (size_t j = 0; j < from_file.levels[i].curves.size(); ++j)
      CHECK(from_file.levels[i].curves[j].geom.same_curve(
          es.tower.levels[i].curves[j].geom));
  }
}

TEST_CASE("equation text for the weighted example") {
  EquationSet es = instantiate_weighted_lines(15, 3);
  std::string text = equation_set_text(es);
  CHECK(text.find("P(1,1,1,5)") != std::string::npos);
  CHECK(text.find("= w^3") != std::string::npos);
  Json j = equation_set_json(es);
  CHECK(j["ambient"] == "P(1,1,1,5)");
  // leading coefficient prod j^2 = (15!)^2
  CHECK(j["equations"][0]["coefficients"].contains("x^15"));
}
