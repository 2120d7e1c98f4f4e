#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "robinsq/contour.hpp"
#include "robinsq/export.hpp"
#include "robinsq/svg.hpp"

using namespace robinsq;

namespace {

constexpr double kPi = std::numbers::pi;

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Export, SeventeenDigitRoundTrip) {
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Export, SpectrumCsvHasHeaderAndIntegersAtLimits) {
  const auto csv = spectrum_csv(enumerate_spectrum(RobinParam::infinity(), 10.0));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p,q,value,k_min,k_max");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,2,1,1");
  const auto finite = spectrum_csv(enumerate_spectrum(RobinParam::finite(1.0), 10.0));
  EXPECT_NE(finite.find('.'), std::string::npos);
  EXPECT_EQ(csv, spectrum_csv(enumerate_spectrum(RobinParam::infinity(), 10.0)));
}

TEST(Export, SpectrumJsonParses) {
  const auto j = nlohmann::json::parse(spectrum_json(enumerate_spectrum(RobinParam::infinity(), 66.0)));
  EXPECT_EQ(j["h"], "inf");
  EXPECT_EQ(j["entries"][0]["value"], 2);
  EXPECT_EQ(j["entries"].back()["k_max"].get<int>(), static_cast<int>(j["entries"].size()));
}

TEST(Export, TableCsvRoundTrip) {
  const auto t = limit_tables(129);
  EXPECT_EQ(parse_table_csv(table_rows_csv(t.dirichlet)), t.dirichlet);
  EXPECT_THROW(parse_table_csv("m,n,value,k_min,k_max\n1,2,x\n"), std::invalid_argument);
  const auto j = nlohmann::json::parse(table_rows_json(t.neumann, t.dirichlet));
  EXPECT_EQ(j["neumann"].size(), 129u);
}

TEST(Export, CrossingsCsv) {
  const auto ev = find_crossing(CurvePair::make({2, 2}, {3, 0}), 1e-3, 1e3);
  ASSERT_TRUE(ev);
  const auto csv = crossings_csv({*ev});
  EXPECT_EQ(csv.rfind("a_p,a_q,b_p,b_q,h_star,lambda_star,sigma_prime,certificate\n", 0), 0u);
  EXPECT_EQ(csv.find("2,2,0,3,1.69"), csv.find('\n') + 1);
  const auto j = nlohmann::json::parse(crossings_json({*ev}));
  EXPECT_NEAR(j["crossings"][0]["h_star"].get<double>(), ev->h_star, 0.0);
}

TEST(Export, SeriesCsvLongFormat) {
  const Series s{"a", {0.0, 1.0}, {2.0, 3.0}};
  EXPECT_EQ(series_csv({s}, "h", "v"), "series,h,v\na,0,2\na,1,3\n");
  EXPECT_EQ(series_csv({Series{"(2,2)", {1.0}, {8.0}}}), "series,x,y\n\"(2,2)\",1,8\n");
  EXPECT_THROW(series_csv({Series{"b", {0.0}, {}}}), std::invalid_argument);
}

TEST(Contour, CircleIsOneClosedLoop) {
  const auto lines = zero_contours([](double x, double y) { return x * x + y * y - 1.0; }, -2, 2, -2, 2, 200);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].closed);
  for (const auto& p : lines[0].points) EXPECT_NEAR(std::hypot(p[0], p[1]), 1.0, 2e-3);
}

TEST(Contour, LineIsOneOpenChain) {
  const auto lines = zero_contours([](double x, double) { return x - 0.123; }, -1, 1, -1, 1, 64);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_FALSE(lines[0].closed);
  for (const auto& p : lines[0].points) EXPECT_NEAR(p[0], 0.123, 1e-12);
  EXPECT_THROW(zero_contours([](double, double) { return 1.0; }, 0, 1, 0, 1, 1), std::invalid_argument);
}

TEST(Contour, NodalLinesOfProductMode) {
  // cos(3x) sin(2y) at h = inf: zeros on x = +-pi/6 and y = 0
  const auto lines = nodal_lines(ThetaFamily(RobinParam::infinity(), 0.0, 2, 1), 300);
  EXPECT_GE(lines.size(), 3u);
  for (const auto& line : lines) {
    for (const auto& p : line.points) {
      const double off = std::min({std::abs(p[0] - kPi / 6), std::abs(p[0] + kPi / 6), std::abs(p[1])});
      EXPECT_LT(off, 2e-2);
    }
  }
  const auto csv = polylines_csv(lines);
  EXPECT_EQ(csv.rfind("curve,x,y\n", 0), 0u);
}

TEST(Svg, LinePlotIsDeterministicAndComplete) {
  PlotOptions o;
  o.title = "t <1>";
  o.x_max = 10;
  o.y_max = 5;
  const std::vector<Series> s{{"a", {0, 5, 10}, {0, 2, 4}}, {"b", {0, 10}, {1, 1}}};
  const auto svg = line_plot_svg(s, o);
  EXPECT_EQ(svg, line_plot_svg(s, o));
  EXPECT_EQ(count_of(svg, "<polyline"), 2);
  EXPECT_NE(svg.find("t &lt;1&gt;"), std::string::npos);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}

TEST(Svg, NodalPanels) {
  const NodalPanel p{"theta = 0", nodal_lines(ThetaFamily(RobinParam::infinity(), kPi / 4, 0, 2), 128)};
  const auto svg = nodal_svg({p, p, p}, "panels", 2);
  EXPECT_EQ(count_of(svg, "theta = 0"), 3);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
