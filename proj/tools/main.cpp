#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "figures.hpp"
#include "robinsq/contour.hpp"
#include "robinsq/crossings.hpp"
#include "robinsq/export.hpp"
#include "robinsq/faberkrahn.hpp"
#include "robinsq/nodal.hpp"
#include "robinsq/spectrum2d.hpp"
#include "robinsq/svg.hpp"
#include "robinsq/verification.hpp"

namespace fs = std::filesystem;
using namespace robinsq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RobinParam parse_h(const std::string& text) {
  try {
    return RobinParam::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid --h '" + text + "': " + e.what());
  }
}

ModeLabel parse_label(const std::string& text) {
  ModeLabel l;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &l.p, &l.q, &tail) != 2 || l.p < 0 || l.q < 0) {
    throw UsageError("invalid label '" + text + "', expected p,q");
  }
  return l;
}

std::optional<fs::path> env_dir() {
  const char* dir = std::getenv("ROBINSQ_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return fs::path(dir);
}

// Temp file in the target directory, then rename: readers never see a partial file.
void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

// --out, else $ROBINSQ_OUT_DIR/<default_name>, else stdout.
void emit(const std::string& out, const std::string& default_name, const std::string& content) {
  std::optional<fs::path> target;
  if (!out.empty()) {
    target = fs::path(out);
  } else if (const auto dir = env_dir()) {
    target = *dir / default_name;
  }
  if (target) {
    write_atomic(*target, content);
    std::cerr << "wrote " << target->string() << '\n';
  } else {
    std::cout << content;
  }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("--format " + format + " is not supported by '" + command + "'");
}

std::string tables_csv(const LimitTables& t) {
  std::ostringstream out;
  out << "table,m,n,value,k_min,k_max\n";
  for (const auto* rows : {&t.neumann, &t.dirichlet}) {
    const char* name = rows == &t.neumann ? "neumann" : "dirichlet";
    for (const auto& r : *rows) {
      out << name << ',' << r.m << ',' << r.n << ',' << r.value << ',' << r.k_min << ','
          << r.k_max << '\n';
    }
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robin Laplacian on the square: spectra, crossings, nodal domains"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string h_text;
  double theta = 0.0;
  double lmax = 50.0;
  int resolution = kDefaultResolution;
  std::string out;
  std::string format = "csv";
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out,-o", out, "Output file (directory for figures)");
    cmd->add_option("--format,-f", format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Ordered eigenvalues with labels and clusters");
  spectrum->add_option("--h", h_text, "Robin parameter (number or inf)")->required();
  spectrum->add_option("--lmax", lmax, "Keep eigenvalues below this value")->check(CLI::PositiveNumber);
  add_common(spectrum);

  auto* crossings = app.add_subcommand("crossings", "Crossing of two curves or a multi-curve scan");
  std::string a_text;
  std::string b_text;
  std::vector<std::string> labels_text;
  double h_lo = 1e-3;
  double h_hi = 1e3;
  crossings->add_option("--a", a_text, "First label p,q");
  crossings->add_option("--b", b_text, "Second label p,q");
  crossings->add_option("--labels", labels_text, "Labels for a scan over all pairs");
  crossings->add_option("--lo", h_lo, "Lower end of the h range")->check(CLI::PositiveNumber);
  crossings->add_option("--hi", h_hi, "Upper end of the h range")->check(CLI::PositiveNumber);
  add_common(crossings);

  auto* nodal = app.add_subcommand("nodal", "Nodal census and nodal lines of a two-mode family");
  std::string label_text = "0,2";
  nodal->add_option("--h", h_text, "Robin parameter (number or inf)")->required();
  nodal->add_option("--theta", theta, "Mixing angle");
  nodal->add_option("--label", label_text, "Mode label p,q");
  nodal->add_option("--resolution", resolution, "Census grid size")->check(CLI::Range(64, 8192));
  add_common(nodal);

  auto* fk = app.add_subcommand("fk", "Disc ground state and Pleijel-type exclusion");
  int fk_n = 0;
  double fk_lambda = 0.0;
  fk->add_option("--h", h_text, "Disc Robin parameter (number or inf)")->required();
  fk->add_option("--n", fk_n, "Eigenvalue index to test for exclusion");
  fk->add_option("--lambda", fk_lambda, "Eigenvalue to test for exclusion");
  add_common(fk);

  auto* tables = app.add_subcommand("tables", "Neumann and Dirichlet limit tables");
  int k_limit = 129;
  tables->add_option("--k", k_limit, "Largest labelling index")->check(CLI::Range(1, 100000));
  add_common(tables);

  auto* figures = app.add_subcommand("figures", "Curve data and SVG plots");
  std::vector<int> figure_ids;
  figures->add_option("--id", figure_ids, "Figure ids 1..6 (default all)")
      ->check(CLI::Range(1, cli::kFigureCount));
  add_common(figures);

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  std::vector<std::string> only;
  double inject_tolerance = 0.0;
  verify->add_option("--only", only, "Criterion ids or tags");
  verify->add_option("--resolution", resolution, "Census grid size")->check(CLI::Range(64, 8192));
  verify->add_option("--inject-alpha-tolerance", inject_tolerance,
                     "Fault injection: coarse alpha bracket width")
      ->check(CLI::PositiveNumber);
  std::string verify_format = "text";
  verify->add_option("--out,-o", out, "Write the JSON report here");
  verify->add_option("--format,-f", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      require_format(format, {"csv", "json"}, "spectrum");
      const auto table = enumerate_spectrum(parse_h(h_text), lmax);
      emit(out, "spectrum." + format, format == "json" ? spectrum_json(table) : spectrum_csv(table));
    } else if (crossings->parsed()) {
      require_format(format, {"csv", "json"}, "crossings");
      if (!(h_lo < h_hi)) throw UsageError("--lo must be below --hi");
      std::vector<CrossingEvent> events;
      if (!labels_text.empty()) {
        if (!a_text.empty() || !b_text.empty()) throw UsageError("use either --a/--b or --labels");
        std::vector<ModeLabel> labels;
        for (const auto& t : labels_text) labels.push_back(parse_label(t));
        events = multi_crossing_scan(labels, h_lo, h_hi);
      } else {
        if (a_text.empty() || b_text.empty()) throw UsageError("need --a and --b, or --labels");
        const auto pair = CurvePair::make(parse_label(a_text), parse_label(b_text));
        if (const auto ev = find_crossing(pair, h_lo, h_hi)) events.push_back(*ev);
      }
      emit(out, "crossings." + format,
           format == "json" ? crossings_json(events) : crossings_csv(events));
    } else if (nodal->parsed()) {
      const auto label = parse_label(label_text);
      const ThetaFamily family(parse_h(h_text), theta, label.p, label.q);
      if (format == "json") {
        emit(out, "nodal.json", census_json(family, count_nodal_domains(family, resolution)));
      } else if (format == "svg") {
        const NodalPanel panel{"h = " + family.h().to_string() + ", theta = " + format_double(theta),
                               nodal_lines(family, 512)};
        emit(out, "nodal.svg", nodal_svg({panel}, "Nodal set of the (" + label_text + ") family", 1));
      } else {
        emit(out, "nodal.csv", polylines_csv(nodal_lines(family, 512)));
      }
    } else if (fk->parsed()) {
      require_format(format, {"csv", "json"}, "fk");
      const auto ground = disc_ground_state(parse_h(h_text));
      std::optional<PleijelCheck> check;
      if (fk_n > 0 || fk_lambda > 0.0) {
        if (fk_n <= 0 || !(fk_lambda >= 2.0)) throw UsageError("--n needs --lambda >= 2 and n >= 1");
        check = pleijel_exclusion(fk_n, fk_lambda);
      }
      std::ostringstream s;
      if (format == "json") {
        s << "{\n  \"h_tilde\": \"" << ground.h_tilde.to_string() << "\",\n  \"alpha_root\": "
          << format_double(ground.alpha_root) << ",\n  \"lambda1\": " << format_double(ground.lambda1)
          << ",\n  \"pleijel_constant\": " << format_double(pleijel_constant());
        if (check) {
          s << ",\n  \"n\": " << check->n << ",\n  \"lambda\": " << format_double(check->lambda)
            << ",\n  \"excluded\": " << (check->verdict == Verdict::excluded ? "true" : "false");
        }
        s << "\n}\n";
      } else {
        s << "h_tilde,alpha_root,lambda1,pleijel_constant" << (check ? ",n,lambda,excluded" : "")
          << '\n'
          << ground.h_tilde.to_string() << ',' << format_double(ground.alpha_root) << ','
          << format_double(ground.lambda1) << ',' << format_double(pleijel_constant());
        if (check) {
          s << ',' << check->n << ',' << format_double(check->lambda) << ','
            << (check->verdict == Verdict::excluded ? 1 : 0);
        }
        s << '\n';
      }
      emit(out, "fk." + format, s.str());
    } else if (tables->parsed()) {
      require_format(format, {"csv", "json"}, "tables");
      const auto t = limit_tables(k_limit);
      emit(out, "tables." + format,
           format == "json" ? table_rows_json(t.neumann, t.dirichlet) : tables_csv(t));
    } else if (figures->parsed()) {
      require_format(format, {"csv", "svg"}, "figures");
      fs::path dir = !out.empty() ? fs::path(out) : env_dir().value_or(fs::path("."));
      if (figure_ids.empty()) {
        for (int id = 1; id <= cli::kFigureCount; ++id) figure_ids.push_back(id);
      }
      // plots accompany the data unless csv is requested explicitly
      const bool with_svg = format == "svg" || figures->count("--format") == 0;
      for (const int id : figure_ids) {
        const auto fig = cli::make_figure(id);
        write_atomic(dir / (fig.stem + ".csv"), fig.csv);
        if (with_svg) write_atomic(dir / (fig.stem + ".svg"), fig.svg);
        std::cerr << "wrote " << (dir / fig.stem).string() << (with_svg ? ".{csv,svg}" : ".csv") << '\n';
      }
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.resolution = resolution;
      try {
        select_criteria(only);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      options.only = only;
      if (inject_tolerance > 0.0) options.alpha_tolerance = inject_tolerance;
      const auto results = run_acceptance(options);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " (" << secs
                  << " s): " << r.detail << std::endl;
      }
      if (verify_format == "json") emit(out, "verify.json", criteria_json(results));
      return all ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
