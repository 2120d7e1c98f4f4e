#pragma once

// CSV (one header row, 17 significant digits) and JSON renderings.

#include <string>
#include <string_view>
#include <vector>

#include "robinsq/contour.hpp"
#include "robinsq/crossings.hpp"
#include "robinsq/nodal.hpp"
#include "robinsq/spectrum2d.hpp"

namespace robinsq {

std::string format_double(double v);

std::string spectrum_csv(const SpectrumTable& table);
std::string spectrum_json(const SpectrumTable& table);

std::string table_rows_csv(const std::vector<TableRow>& rows);
std::string table_rows_json(const std::vector<TableRow>& neumann,
                            const std::vector<TableRow>& dirichlet);
/// Parses the m,n,value,k_min,k_max layout written by table_rows_csv.
std::vector<TableRow> parse_table_csv(std::string_view text);

std::string crossings_csv(const std::vector<CrossingEvent>& events);
std::string crossings_json(const std::vector<CrossingEvent>& events);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Long format: series,x,y.
std::string series_csv(const std::vector<Series>& series, std::string_view x_name = "x",
                       std::string_view y_name = "y");

std::string census_json(const ThetaFamily& family, const NodalCensus& census);

/// curve,x,y with one curve index per polyline.
std::string polylines_csv(const std::vector<Polyline>& lines);

}  // namespace robinsq
