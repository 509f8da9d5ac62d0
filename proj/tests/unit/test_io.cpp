#include <gtest/gtest.h>

#include <sstream>

#include "bspec/errors.hpp"
#include "bspec/io.hpp"

using namespace bspec;

TEST(SpectrumJson, RoundTrip) {
  const FourierSpectrum s(4, {{0, 0.1}, {0b1010, -2.5}, {0b1111, 1.0 / 3.0}});
  const auto j = io::spectrum_to_json(s);
  EXPECT_EQ(j.at("coefficients")[1].at("subset"), (std::vector<int>{2, 4}));
  const auto text = j.dump();
  EXPECT_EQ(io::spectrum_from_json(nlohmann::json::parse(text)), s);
}

TEST(SpectrumJson, RejectsBadSubsets) {
  auto parse = [](const char* text) { return io::spectrum_from_json(nlohmann::json::parse(text)); };
  EXPECT_THROW(parse(R"({"n":2,"coefficients":[{"subset":[3],"value":1}]})"), DomainError);
  EXPECT_THROW(parse(R"({"n":2,"coefficients":[{"subset":[2,1],"value":1}]})"), DomainError);
  EXPECT_THROW(parse(R"({"n":2,"coefficients":[{"subset":[1],"value":1},{"subset":[1],"value":2}]})"),
               DomainError);
  EXPECT_THROW(parse(R"({"n":2})"), ParseError);
  EXPECT_THROW(parse(R"({"n":2,"coefficients":[{"subset":[1],"value":"x"}]})"), ParseError);
}

TEST(TruthTable, RoundTrip) {
  const BooleanFunction f(4, {1, -2, 3.25, 0, 1e-300, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0.1});
  std::stringstream ss;
  io::write_truth_table(ss, f);
  const auto g = io::read_truth_table(ss);
  EXPECT_EQ(std::vector<double>(g.values().begin(), g.values().end()),
            std::vector<double>(f.values().begin(), f.values().end()));
}

TEST(TruthTable, ErrorsCarryLineNumbers) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_truth_table(in);
  };
  try {
    read("n=2\n1 2\n3 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    read("\nsize=2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(read("n=2\n1 2 3\n"), ParseError);
  EXPECT_THROW(read("n=2\n1 2 3 4 5\n"), ParseError);
  EXPECT_THROW(read("n=30\n"), CapacityError);
  EXPECT_EQ(read("  n=1\n\n 4\n-4 \n").size(), 2u);
}

TEST(ReportJson, RoundTrip) {
  InequalityReport r = make_report("demo", 1.0, 3.0);
  r.witness = "row=5";
  r.params = {{"n", 4}, {"rho", 0.25}};
  r.asserted = false;
  const auto j = io::report_to_json(r);
  EXPECT_EQ(j.at("params").at("asserted"), 0);
  const auto back = io::report_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.name, "demo");
  EXPECT_EQ(back.ratio, 1.0 / 3.0);
  EXPECT_EQ(back.witness, r.witness);
  EXPECT_EQ(back.params, r.params);
  EXPECT_FALSE(back.asserted);
}

TEST(ReportCsv, InlinesParams) {
  std::vector<InequalityReport> rs{make_report("a", 1, 2), make_report("b,c", 3, 1)};
  rs[0].params["n"] = 3;
  rs[1].params["d"] = 2;
  std::ostringstream out;
  io::write_reports_csv(out, rs);
  EXPECT_EQ(out.str(),
            "name,lhs,rhs,ratio,pass,tol,asserted,witness,d,n\n"
            "a,1,2,0.5,1,1.0000000000000001e-09,1,,,3\n"
            "\"b,c\",3,1,3,0,1.0000000000000001e-09,1,,2,\n");
}

TEST(Report, Ratios) {
  EXPECT_EQ(safe_ratio(0, 0), 0.0);
  EXPECT_TRUE(std::isinf(safe_ratio(1, 0)));
  const auto r = make_report("x", 1.0 + 1e-10, 1.0);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(make_report("x", 1.0 + 1e-8, 1.0).pass);
}
