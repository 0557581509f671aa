#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wulff/io.hpp"
#include "wulff/oracle.hpp"
#include "wulff/svg.hpp"
#include "wulff/tower.hpp"

namespace {

std::vector<double> parse_mass_range(const std::string& spec) {
  // single value, or start:stop:step
  std::vector<double> out;
  auto first = spec.find(':');
  if (first == std::string::npos) {
    out.push_back(std::stod(spec));
    return out;
  }
  auto second = spec.find(':', first + 1);
  if (second == std::string::npos)
    throw std::invalid_argument("mass range must be start:stop:step");
  double start = std::stod(spec.substr(0, first));
  double stop = std::stod(spec.substr(first + 1, second - first - 1));
  double step = std::stod(spec.substr(second + 1));
  if (step <= 0.0) throw std::invalid_argument("mass range step must be positive");
  for (double m = start; m <= stop + 0.5 * step; m += step) out.push_back(m);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Towers of Wulff plaquettes: minimizers of the stacked "
               "anisotropic-perimeter problem on convex planar domains"};
  app.require_subcommand(1);

  std::string domain_src = "unit-square";
  std::string norm_src = "euclidean";
  app.add_option("--domain", domain_src,
                 "unit-square | rectangle:W:H | regular:k | domain file");
  app.add_option("--norm", norm_src, "euclidean | l1 | Wulff-polygon file");

  std::string mass_spec;
  std::string out_path;
  std::string csv_path;
  std::string svg_path;
  int grid_n = 100000;
  double verify_tol = 1e-5;

  CLI::App* solve = app.add_subcommand("solve", "solve one mass, write a JSON report");
  solve->add_option("--mass", mass_spec, "total mass m")->required();
  solve->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "solve a mass range, write CSV");
  sweep->add_option("--mass", mass_spec, "mass range start:stop:step")->required();
  sweep->add_option("--csv", csv_path, "CSV output path")->required();

  CLI::App* verify = app.add_subcommand("verify", "compare against the grid oracle");
  verify->add_option("--mass", mass_spec, "total mass m")->required();
  verify->add_option("--grid", grid_n, "oracle grid resolution");
  verify->add_option("--tol", verify_tol, "allowed oracle excess");

  CLI::App* render = app.add_subcommand("render", "render the tower as SVG");
  render->add_option("--mass", mass_spec, "total mass m")->required();
  render->add_option("--svg", svg_path, "SVG output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    wulff::RoundedRegion domain = wulff::parse_domain(domain_src);
    wulff::Norm norm = wulff::parse_norm(norm_src);

    if (solve->parsed()) {
      double m = std::stod(mass_spec);
      wulff::TowerProfile profile = wulff::solve_tower({domain, norm, m});
      write_text(out_path, wulff::report_to_json(profile, domain, norm).dump(2) + "\n");
    } else if (sweep->parsed()) {
      std::vector<double> masses = parse_mass_range(mass_spec);
      auto profiles = wulff::energy_curve(domain, norm, masses);
      std::ostringstream csv;
      csv << "m,energy,j_max,case,r_bar\n";
      csv.precision(17);
      for (std::size_t i = 0; i < masses.size(); ++i)
        csv << masses[i] << ',' << profiles[i].energy << ',' << profiles[i].j_max << ','
            << to_string(profiles[i].tower_case) << ',' << profiles[i].r_bar << '\n';
      write_text(csv_path, csv.str());
    } else if (verify->parsed()) {
      double m = std::stod(mass_spec);
      wulff::OracleReport report = wulff::grid_min_energy({domain, norm, m}, grid_n);
      std::cout << "analytic energy: " << report.best_energy - report.discrepancy
                << "\noracle energy:   " << report.best_energy
                << "\ndiscrepancy:     " << report.discrepancy << "\n";
      double scale = std::max(1.0, report.best_energy);
      if (report.discrepancy > verify_tol * scale ||
          report.discrepancy < -(1e-6 + 1e-6 * scale)) {
        std::cerr << "verification FAILED: oracle disagreement beyond tolerance\n";
        return 3;
      }
      std::cout << "verification OK\n";
    } else if (render->parsed()) {
      double m = std::stod(mass_spec);
      wulff::TowerProfile profile = wulff::solve_tower({domain, norm, m});
      wulff::write_svg(profile, domain, norm, svg_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
