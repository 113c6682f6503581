#include <gtest/gtest.h>

#include "coset/serialize.hpp"

using namespace coset;

TEST(Serialize, SeriesJsonRoundTripIsExact) {
  const std::vector<FracSeries> samples = {
      FracSeries::zero(),
      FracSeries::one(),
      osp_character({2, 3}, 6),
      FracSeries(6, -7, {frac(1, 3), Rational(0), frac(-22, 7)}, 10),
      monomial(frac(5, 9), -3, 4, 2),
  };
  for (const FracSeries& s : samples) {
    const std::string text = series_to_json(s);
    const FracSeries back = series_from_json(text);
    EXPECT_EQ(back.denominator(), s.denominator());
    EXPECT_EQ(back.lowest(), s.lowest());
    EXPECT_EQ(back.coeffs(), s.coeffs());
    EXPECT_EQ(back.order(), s.order());
    EXPECT_EQ(series_to_json(back), text);
  }
}

TEST(Serialize, ZeroSeriesJsonHasNullOrder) {
  EXPECT_NE(series_to_json(FracSeries::zero()).find("\"order\": null"), std::string::npos);
}

TEST(Serialize, MalformedSeriesJson) {
  EXPECT_THROW(series_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(series_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(series_from_json(R"({"denominator":1,"lowest":0,"coeffs":["1/0"],"order":null})"),
               std::invalid_argument);
}

TEST(Serialize, SeriesCsv) {
  const std::string csv = series_to_csv(FracSeries(2, -1, {Rational(1), Rational(0), frac(3, 4)}, std::nullopt));
  EXPECT_EQ(csv, "exponent,coefficient\n-1/2,1\n1/2,3/4\n");
}

TEST(Serialize, KacTableCsvUsesFractions) {
  const std::string csv = kac_table_csv(MinimalModel(10, 7));
  EXPECT_NE(csv.find("2,4/7,27/280,-1/35,11/56,27/35,95/56,104/35,1287/280,46/7\n"), std::string::npos);
  EXPECT_EQ(csv.find('.'), std::string::npos);
}

TEST(Serialize, ModuleSumJsonIsSorted) {
  const std::string j = module_sum_json(ModuleSum{{{3, 1}, 1}, {{1, 1}, 2}});
  EXPECT_LT(j.find("\"r\": 1"), j.find("\"r\": 3"));
  EXPECT_NE(j.find("\"mult\": 2"), std::string::npos);
}

TEST(Serialize, ReportSchema) {
  const std::string j = report_json(verify_central_charge());
  for (const char* key : {"\"check\"", "\"order\"", "\"rows\"", "\"label\"", "\"coeffs\"", "\"pass\": true"}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
  EXPECT_NE(j.find("\"4/5\""), std::string::npos);
}

TEST(Serialize, CoefficientTableCsvAndJsonAreDeterministic) {
  const Table2 t = table2_report(19);
  const std::string csv = table2_csv(t);
  EXPECT_EQ(csv, table2_csv(table2_report(19)));
  EXPECT_NE(csv.find("\"ch[L(1,0)]^2\",1,10,43,132,375"), std::string::npos);
  EXPECT_NE(csv.find(",6083848\n"), std::string::npos);
  const std::string j = table2_json(t);
  EXPECT_NE(j.find("\"pass\": true"), std::string::npos);
  EXPECT_NE(j.find("\"lead\": \"-1/30\""), std::string::npos);
}

TEST(Serialize, ExtFusionTableShape) {
  const std::string j = ext_fusion_table_json();
  std::size_t entries = 0;
  for (std::size_t pos = j.find("\"a\":"); pos != std::string::npos; pos = j.find("\"a\":", pos + 1)) ++entries;
  EXPECT_EQ(entries, 27u * 27u);
  EXPECT_EQ(j, ext_fusion_table_json());
}
