#include "robinsq/export.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace robinsq {

using nlohmann::json;

namespace {

// RFC 4180 quoting for fields holding a comma, quote or newline.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json h_json(RobinParam h) {
  if (h.is_infinite()) return "inf";
  return h.value();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string spectrum_csv(const SpectrumTable& table) {
  const bool exact = table.h.is_infinite() || table.h.is_zero();
  std::ostringstream out;
  out << "p,q,value,k_min,k_max\n";
  for (const auto& e : table.entries) {
    out << e.eigen.label.p << ',' << e.eigen.label.q << ',';
    if (exact) {
      out << static_cast<long long>(std::llround(e.eigen.value));
    } else {
      out << format_double(e.eigen.value);
    }
    out << ',' << e.k_min << ',' << e.k_max << '\n';
  }
  return out.str();
}

std::string spectrum_json(const SpectrumTable& table) {
  const bool exact = table.h.is_infinite() || table.h.is_zero();
  json j;
  j["h"] = h_json(table.h);
  j["lambda_max"] = table.lambda_max;
  json entries = json::array();
  for (const auto& e : table.entries) {
    json row;
    row["p"] = e.eigen.label.p;
    row["q"] = e.eigen.label.q;
    if (exact) {
      row["value"] = static_cast<long long>(std::llround(e.eigen.value));
    } else {
      row["value"] = e.eigen.value;
    }
    row["k_min"] = e.k_min;
    row["k_max"] = e.k_max;
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string table_rows_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "m,n,value,k_min,k_max\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << r.value << ',' << r.k_min << ',' << r.k_max << '\n';
  }
  return out.str();
}

std::string table_rows_json(const std::vector<TableRow>& neumann,
                            const std::vector<TableRow>& dirichlet) {
  const auto rows = [](const std::vector<TableRow>& t) {
    json a = json::array();
    for (const auto& r : t) {
      a.push_back({{"m", r.m}, {"n", r.n}, {"value", r.value}, {"k_min", r.k_min}, {"k_max", r.k_max}});
    }
    return a;
  };
  json j;
  j["neumann"] = rows(neumann);
  j["dirichlet"] = rows(dirichlet);
  return j.dump(2) + "\n";
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("m,n", 0) == 0) continue;
    }
    TableRow r;
    long long value = 0;
    if (std::sscanf(line.c_str(), "%d,%d,%lld,%d,%d", &r.m, &r.n, &value, &r.k_min, &r.k_max) != 5) {
      throw std::invalid_argument("parse_table_csv: malformed row '" + line + "'");
    }
    r.value = value;
    rows.push_back(r);
  }
  return rows;
}

std::string crossings_csv(const std::vector<CrossingEvent>& events) {
  std::ostringstream out;
  out << "a_p,a_q,b_p,b_q,h_star,lambda_star,sigma_prime,certificate\n";
  for (const auto& e : events) {
    out << e.pair.a.p << ',' << e.pair.a.q << ',' << e.pair.b.p << ',' << e.pair.b.q << ','
        << format_double(e.h_star) << ',' << format_double(e.lambda_star) << ','
        << format_double(e.sigma_prime_at) << ',' << e.certificate_sign << '\n';
  }
  return out.str();
}

std::string crossings_json(const std::vector<CrossingEvent>& events) {
  json a = json::array();
  for (const auto& e : events) {
    a.push_back({{"a", {e.pair.a.p, e.pair.a.q}},
                 {"b", {e.pair.b.p, e.pair.b.q}},
                 {"h_star", e.h_star},
                 {"lambda_star", e.lambda_star},
                 {"sigma_prime", e.sigma_prime_at},
                 {"certificate", e.certificate_sign}});
  }
  return json{{"crossings", a}}.dump(2) + "\n";
}

std::string series_csv(const std::vector<Series>& series, std::string_view x_name,
                       std::string_view y_name) {
  std::ostringstream out;
  out << "series," << x_name << ',' << y_name << '\n';
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("series_csv: x/y length mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << csv_field(s.name) << ',' << format_double(s.x[i]) << ',' << format_double(s.y[i]) << '\n';
    }
  }
  return out.str();
}

std::string census_json(const ThetaFamily& family, const NodalCensus& census) {
  json domains = json::array();
  for (const auto& d : census.info) {
    domains.push_back({{"sign", d.sign}, {"area", d.area}, {"outer", d.outer}});
  }
  json j{{"h", h_json(family.h())},
         {"theta", family.theta()},
         {"p", family.p()},
         {"q", family.q()},
         {"lambda", family.lambda()},
         {"domains", census.domains},
         {"boundary_zeros", census.boundary_zeros},
         {"interior_critical", census.interior_critical},
         {"inner_domains", census.inner_domains},
         {"outer_domains", census.outer_domains},
         {"resolution", census.resolution},
         {"refined", census.refined},
         {"domain_info", domains}};
  return j.dump(2) + "\n";
}

std::string polylines_csv(const std::vector<Polyline>& lines) {
  std::ostringstream out;
  out << "curve,x,y\n";
  for (std::size_t c = 0; c < lines.size(); ++c) {
    for (const auto& p : lines[c].points) {
      out << c << ',' << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
    }
  }
  return out.str();
}

}  // namespace robinsq
