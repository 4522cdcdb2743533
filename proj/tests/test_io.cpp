#include "nilmult/io.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace nilmult;

namespace {

const std::string data_dir = NILMULT_DATA_DIR;

}  // namespace

TEST(GroupFiles, LoadAllForms) {
  const auto perm = resolve_group(data_dir + "/d8_perm.json");
  EXPECT_EQ(perm.group().order(), 8u);
  EXPECT_EQ(classify_small_group(perm.group()), SmallGroupKind::dihedral_2group);

  const auto table = resolve_group(data_dir + "/q8_table.json");
  EXPECT_EQ(table.group().order(), 8u);
  EXPECT_EQ(classify_small_group(table.group()), SmallGroupKind::quaternion_2group);

  const auto heis = resolve_group(data_dir + "/heisenberg3_table.json");
  EXPECT_EQ(classify_small_group(heis.group()), SmallGroupKind::extraspecial_exp_p);

  const auto ab = resolve_group(data_dir + "/z4_z2.json");
  ASSERT_TRUE(ab.abelian);
  EXPECT_EQ(*ab.abelian, AbelianGroup::from_cyclic_orders({4, 2}));
  EXPECT_EQ(ab.group().order(), 8u);
}

TEST(GroupFiles, BuiltinNames) {
  EXPECT_EQ(resolve_group("d8").group().order(), 8u);
  EXPECT_EQ(resolve_group("extraspecial(3, exponent-p)").group().order(), 27u);
  EXPECT_THROW(resolve_group("not-a-group"), InvalidArgument);
}

TEST(GroupFiles, MalformedInput) {
  EXPECT_THROW(resolve_group(data_dir + "/malformed_syntax.json"), GroupFileError);
  EXPECT_THROW(resolve_group(data_dir + "/malformed_table.json"), GroupFileError);
  EXPECT_THROW(resolve_group(data_dir + "/malformed_type.json"), GroupFileError);
  EXPECT_THROW(parse_group_json(R"({"type":"abelian","invariants":[4,1]})"), GroupFileError);
  EXPECT_THROW(parse_group_json(R"({"type":"abelian","invariants":"4"})"), GroupFileError);
  EXPECT_THROW(parse_group_json(R"({"type":"perm","degree":3,"generators":[[1,1,2]]})"), GroupFileError);
  EXPECT_THROW(parse_group_json(R"({"type":"table","labels":["e"],"table":[[0,0]]})"), GroupFileError);
  EXPECT_THROW(parse_group_json(R"([1,2])"), GroupFileError);
  EXPECT_NO_THROW(parse_group_json(R"({"type":"abelian","invariants":[6,4]})"));
}

TEST(ReportJson, RoundTripIsByteIdentical) {
  for (const char* name : {"d8", "q8", "trivial", "s3", "extraspecial(3,exponent-p)", "abelian(8,4,2)"}) {
    for (unsigned c = 1; c <= 3; ++c) {
      const BoundContext ctx(*groups::by_name(name), c);
      const auto reports = all_reports(ctx);
      const auto text = dump_json(reports_to_json(ctx, name, reports));
      // parse, rebuild every report from its JSON form, serialize again
      const auto parsed = nlohmann::json::parse(text);
      std::vector<BoundReport> rebuilt;
      for (const auto& r : parsed.at("reports")) rebuilt.push_back(report_from_json(r));
      const auto again = dump_json(reports_to_json(ctx, name, rebuilt));
      EXPECT_EQ(text, again) << name << " c=" << c;
      EXPECT_EQ(dump_json(parsed), text);
    }
  }
}

TEST(ReportJson, NumbersAreStrings) {
  const BoundContext ctx(groups::elementary(2, 4), 3);
  const auto j = reports_to_json(ctx, "elementary(2,4)", all_reports(ctx));
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& x) {
    EXPECT_FALSE(x.is_number()) << x.dump();
    if (x.is_structured())
      for (const auto& y : x) walk(y);
  };
  walk(j);
  // chi_4(4) = 60
  const auto& r = j.at("reports").at(1);
  EXPECT_EQ(r.at("bound_id"), "corollary12.upper");
  EXPECT_EQ(r.at("rhs").at("factors").at("2"), "60");
}

TEST(ReportCsv, Columns) {
  const BoundContext ctx(groups::trivial(), 1);
  const auto csv = reports_to_csv(all_reports(ctx));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "bound_id,quantity,target,lhs,relation,rhs,applicable,reason,holds");
  EXPECT_NE(csv.find("\ncorollary12.lower,order,p^chi_2(d),1,le,1,true,,true\n"), std::string::npos);
  EXPECT_NE(csv.find("theorem_C.order,order,,,le,,false,class_below_2,not_applicable"), std::string::npos);
}

TEST(ReportText, MentionsMultiplierAndVerdicts) {
  const BoundContext ctx(groups::d8(), 2);
  const auto text = reports_to_text(ctx, "d8", all_reports(ctx));
  EXPECT_NE(text.find("M^(2)(G) = Z4 + Z2 (provenance: Example 28)"), std::string::npos);
  EXPECT_NE(text.find("corollary27 [exponent]"), std::string::npos);
  EXPECT_EQ(text.find(": fails"), std::string::npos);
}
