#include <gtest/gtest.h>

#include "refcalc/errors.hpp"
#include "refcalc/model.hpp"

using namespace refcalc;

namespace {

const std::string kData = REFCALC_TEST_DATA;

template <typename Fn>
ParseError parse_error(Fn fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(ModelParse, FamilyFileHasThreeDeclarations) {
  const Model m = parse_model_file(kData + "/families.rc");
  ASSERT_EQ(m.declarations.size(), 3u);
  ASSERT_EQ(m.families().size(), 1u);
  EXPECT_EQ(m.families()[0]->family.to_string(), "RECT(FIN, FULL)");
  EXPECT_EQ(m.families()[0]->index.to_string(), "Prod(Atom A, Atom A)");
}

TEST(ModelParse, PrintParseIsIdentity) {
  for (const char* file : {"/families.rc", "/modules.rc", "/planted_sum_product.rc"}) {
    const Model m = parse_model_file(kData + file);
    const Model again = parse_model(print_model(m));
    EXPECT_EQ(again.declarations, m.declarations) << file;
    EXPECT_EQ(print_model(again), print_model(m)) << file;
  }
}

TEST(ModelParse, ModulesAndClaims) {
  const Model m = parse_model_file(kData + "/modules.rc");
  EXPECT_EQ(m.modules().size(), 6u);
  ASSERT_EQ(m.claims().size(), 1u);
  const ModuleObject& h = *m.module("H").value;
  EXPECT_EQ(h.ring, CoefficientRing::prime(5));
  EXPECT_EQ(h.family.to_string(), "RECT(POLAR(RECT(FIN, FULL)), RECT(FIN, FULL))");
  EXPECT_THROW(m.module("nope"), TypeError);
}

TEST(ModelParse, RectOverSumNamesTheDeclaration) {
  const ParseError e = parse_error([] { parse_model_file(kData + "/rect_over_sum.rc"); });
  EXPECT_NE(e.bare_message().find("type error in family Bad"), std::string::npos) << e.what();
  EXPECT_NE(e.bare_message().find("RECT requires a Prod index"), std::string::npos);
  EXPECT_EQ(e.line(), 3u);
}

TEST(ModelParse, Diagnostics) {
  EXPECT_EQ(parse_error([] { parse_model("atom A\natom A\n"); }).line(), 2u);
  EXPECT_NE(parse_error([] { parse_model("family P : Atom A = FIN\n"); }).bare_message().find("A"), std::string::npos);
  EXPECT_THROW(parse_model("atom A\nmodule M = P\n"), ParseError);
  EXPECT_THROW(parse_model("atom A\natom B\nfamily P : Atom A = FIN\nfamily Q : Atom B = FIN\n"
                           "module M = P\nmodule N = Q\nclaim equal(M, N)\n"),
               ParseError);
  EXPECT_THROW(parse_model("atom A\nfamily P : Atom A = FIN\nmodule M = P over Fp:5\nmodule N = P\n"
                           "module H = hom(M, N)\n"),
               ParseError);
  EXPECT_THROW(parse_model("atom A\nfamily P : Atom A = FIN\nmodule M = frobnicate(P, P)\n"), ParseError);
  const ParseError e = parse_error([] { parse_model("atom A\nindex I = Prod(Atom A,"); });
  EXPECT_EQ(e.line(), 2u);
}

TEST(StructureJson, NonSquareMultIsADimensionDiagnostic) {
  try {
    parse_model_file(kData + "/nonsquare_mult.json");
    FAIL() << "expected a dimension diagnostic";
  } catch (const TypeError& e) {
    EXPECT_NE(std::string(e.what()).find("mult[1][1] has 3 entries, expected dim = 2"), std::string::npos) << e.what();
  }
}

TEST(StructureJson, RoundTrip) {
  const Model m = parse_model_file(kData + "/group_algebra_z2_f3.json");
  ASSERT_EQ(m.structures.size(), 1u);
  const StructureBlock& b = m.structures[0].block;
  EXPECT_EQ(m.structures[0].name, "group_algebra_z2_f3");
  ASSERT_TRUE(b.is_bialgebra());
  EXPECT_TRUE(identical(b.bialgebra(), group_algebra(Field::prime(3), {2})));
  const StructureBlock again = structure_from_json(structure_to_json(b.bialgebra()));
  EXPECT_TRUE(identical(again.bialgebra(), b.bialgebra()));
  for (const auto& e : bialgebra_catalog(Field::rationals()))
    EXPECT_TRUE(identical(structure_from_json(structure_to_json(e.bialgebra)).bialgebra(), e.bialgebra)) << e.name;
}

TEST(StructureJson, RationalStrings) {
  const json j = json::parse(R"({"field":"Q","dim":1,"mult":[[["1/2"]]],"unit":["2"]})");
  const StructureBlock b = structure_from_json(j);
  ASSERT_TRUE(b.algebra);
  EXPECT_EQ(b.algebra->mult(0, 0, 0).to_string(), "1/2");
  EXPECT_FALSE(b.coalgebra);
  EXPECT_THROW(structure_from_json(json::parse(R"({"field":"Q","dim":1})")), TypeError);
  EXPECT_THROW(structure_from_json(json::parse(R"({"field":"Fp:4","dim":1,"unit":[1],"mult":[[[1]]]})")), Error);
}

TEST(TowerJson, FileAndRoundTrip) {
  const Model m = parse_model_file(kData + "/adic_tower_f2.json");
  ASSERT_EQ(m.towers.size(), 1u);
  const AlgebraTower& t = m.towers[0].tower;
  const Field f2 = Field::prime(2);
  const AlgebraTower ref = adic_tower(f2, parse_polynomial("x", f2), 2);
  EXPECT_EQ(t.depth(), 2u);
  EXPECT_EQ(t.levels[1].mult, ref.levels[1].mult);
  EXPECT_EQ(t.transitions[0], ref.transitions[0]);
  const AlgebraTower again = tower_from_json(tower_to_json(t));
  EXPECT_EQ(again.transitions[0], t.transitions[0]);
}

TEST(Json, SyntaxErrorsHaveLocations) {
  const std::string path = testing::TempDir() + "/broken.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("{\n  \"field\": \"Q\",\n  \"dim\": 1,,\n}\n", f);
    std::fclose(f);
  }
  const ParseError e = parse_error([&] { read_json_file(path); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_THROW(read_json_file(kData + "/does_not_exist.json"), Error);
}
