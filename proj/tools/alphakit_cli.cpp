// alphakit: solve the weighted Laplace equation on the unit disk, evaluate
// its kernels, and certify the toolkit's inequalities from the command line.
//
// Exit codes: 0 success / verification passed, 1 file I/O failure,
// 2 domain or configuration error, 3 solution residual above tolerance,
// 4 theorem precondition failure, 5 verification failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "alphakit/analysis.hpp"
#include "alphakit/io.hpp"
#include "alphakit/kernels.hpp"
#include "alphakit/parallel.hpp"

using namespace alphakit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUncertified = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitVerifyFailed = 5;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
  std::stringstream ss(text);
  std::string re, im;
  std::getline(ss, re, ',');
  const bool has_im = static_cast<bool>(std::getline(ss, im, ','));
  try {
    return Complex(std::stod(re), has_im ? std::stod(im) : 0.0);
  } catch (const std::exception&) {
    throw DomainError("cannot parse complex value '" + text + "' (want re[,im])");
  }
}

struct GridSpec {
  std::string spec = "polar:16x64";
  double r_max = 0.95;

  analysis::Grid build() const {
    if (!(r_max > 0.0 && r_max < 1.0)) {
      throw DomainError("grid: r-max must lie in (0,1)");
    }
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "polar") {
      const std::size_t x = args.find('x');
      if (x == std::string::npos) throw DomainError("grid: polar wants polar:NRxNT");
      try {
        return analysis::Grid::polar(std::stoi(args.substr(0, x)),
                                     std::stoi(args.substr(x + 1)), r_max);
      } catch (const std::invalid_argument&) {
        throw DomainError("grid: bad polar spec '" + spec + "'");
      }
    }
    if (kind == "cart" || kind == "cartesian") {
      try {
        return analysis::Grid::cartesian(std::stod(args), r_max);
      } catch (const std::invalid_argument&) {
        throw DomainError("grid: bad cartesian spec '" + spec + "'");
      }
    }
    throw DomainError("grid: unknown spec '" + spec + "' (want polar:NRxNT or cart:STEP)");
  }
};

struct QuadSpec {
  int circle = 512;
  int radial = 64;
  int angular = 256;

  solver::QuadratureConfig build() const {
    if (circle < 8 || radial < 8 || angular < 8) {
      throw DomainError("quadrature orders must be at least 8");
    }
    return {circle, radial, angular};
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

solver::BoundaryData load_boundary(const std::string& path) {
  if (path.empty()) return solver::BoundaryData::zero();
  return io::parse_boundary_json(read_text(path));
}

series::PolynomialMap parse_psi(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "rotation") return series::PolynomialMap::rotation(std::stod(args));
    if (kind == "dilation") return series::PolynomialMap::dilation(parse_complex(args));
    if (kind == "square") return series::PolynomialMap::power(2);
    if (kind == "power") return series::PolynomialMap::power(std::stoi(args));
    if (kind == "identity") return series::PolynomialMap::identity();
  } catch (const std::invalid_argument&) {
    throw DomainError("psi: bad parameter in '" + spec + "'");
  }
  throw DomainError("psi: unknown map '" + spec +
                    "' (want rotation:T, dilation:RE[,IM], square, power:M, identity)");
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

struct KernelArgs {
  double alpha = 0.0;
  std::vector<std::string> z, w;
  std::vector<double> s;
  double tol = 1e-12;
  std::string points_file;
  std::string out;
};

std::vector<std::vector<double>> read_points_file(const std::string& path, std::size_t columns) {
  std::vector<std::vector<double>> rows;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<double> row;
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        row.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw DomainError("points file: bad number '" + item + "'");
      }
    }
    if (row.size() != columns) {
      throw DomainError("points file: expected " + std::to_string(columns) +
                        " columns per row");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bound_cell(const KernelValue& kv) {
  return kv.abs_bound.has_value() ? io::format_double(*kv.abs_bound) : std::string();
}

int run_kernel(const std::string& which, const KernelArgs& args) {
  std::ostringstream out;
  if (which == "h") {
    const Alpha a(args.alpha);
    std::vector<double> ss = args.s;
    if (!args.points_file.empty()) {
      for (const auto& row : read_points_file(args.points_file, 1)) ss.push_back(row[0]);
    }
    if (ss.empty()) throw DomainError("kernel h: no --s values given");
    out << "s,value,abs_bound\n";
    for (double s : ss) {
      const KernelValue kv = kernels::h_alpha_value(s, a, args.tol);
      out << io::format_double(s) << ',' << io::format_double(kv.value.real()) << ','
          << bound_cell(kv) << '\n';
    }
  } else if (which == "poisson") {
    const Alpha a(args.alpha);
    std::vector<Complex> zs;
    for (const auto& t : args.z) zs.push_back(parse_complex(t));
    if (!args.points_file.empty()) {
      for (const auto& row : read_points_file(args.points_file, 2)) {
        zs.push_back(Complex(row[0], row[1]));
      }
    }
    if (zs.empty()) throw DomainError("kernel poisson: no --z points given");
    out << "zx,zy,value_re,value_im\n";
    for (Complex z : zs) {
      const KernelValue kv = kernels::poisson_kernel_alpha_value(z, a);
      out << io::format_double(z.real()) << ',' << io::format_double(z.imag()) << ','
          << io::format_double(kv.value.real()) << ',' << io::format_double(kv.value.imag())
          << '\n';
    }
  } else {  // green / phi share the (z, w) signature
    std::vector<std::pair<Complex, Complex>> pairs;
    if (args.z.size() != args.w.size()) {
      throw DomainError("kernel " + which + ": need matching --z and --w");
    }
    for (std::size_t i = 0; i < args.z.size(); ++i) {
      pairs.emplace_back(parse_complex(args.z[i]), parse_complex(args.w[i]));
    }
    if (!args.points_file.empty()) {
      for (const auto& row : read_points_file(args.points_file, 4)) {
        pairs.emplace_back(Complex(row[0], row[1]), Complex(row[2], row[3]));
      }
    }
    if (pairs.empty()) throw DomainError("kernel " + which + ": no point pairs given");
    if (which == "green") {
      const Alpha a(args.alpha);
      out << "zx,zy,wx,wy,value_re,value_im,abs_bound\n";
      for (const auto& [z, w] : pairs) {
        const KernelValue kv = kernels::green_alpha_value(z, w, a);
        out << io::format_double(z.real()) << ',' << io::format_double(z.imag()) << ','
            << io::format_double(w.real()) << ',' << io::format_double(w.imag()) << ','
            << io::format_double(kv.value.real()) << ','
            << io::format_double(kv.value.imag()) << ',' << bound_cell(kv) << '\n';
      }
    } else {
      out << "zx,zy,wx,wy,value,abs_bound\n";
      for (const auto& [z, w] : pairs) {
        const KernelValue kv = kernels::phi_value(z, w);
        out << io::format_double(z.real()) << ',' << io::format_double(z.imag()) << ','
            << io::format_double(w.real()) << ',' << io::format_double(w.imag()) << ','
            << io::format_double(kv.value.real()) << ',' << bound_cell(kv) << '\n';
      }
    }
  }
  write_text(args.out, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve / series
// ---------------------------------------------------------------------------

struct FieldOutput {
  std::vector<io::FieldRow> rows;
  double max_residual = 0.0;
  std::size_t residual_points = 0;
};

json summary_json(const FieldOutput& field, double alpha, const std::string& grid_desc,
                  double tol) {
  json doc;
  doc["alpha"] = alpha;
  doc["grid"] = grid_desc;
  doc["points"] = field.rows.size();
  doc["max_residual"] = field.max_residual;
  doc["residual_points"] = field.residual_points;
  doc["tolerance"] = tol;
  doc["certified"] = field.max_residual <= tol;
  return doc;
}

int run_solve(double alpha, const std::string& boundary_path, const std::string& source_spec,
              const GridSpec& grid_spec, const QuadSpec& quad_spec, double tol,
              const std::string& out, const std::string& summary_path) {
  const Alpha a(alpha);
  const auto fstar = load_boundary(boundary_path);
  const auto g = source_spec.empty() ? solver::SourceField::zero()
                                     : solver::SourceField::parse(source_spec);
  const auto grid = grid_spec.build();
  const solver::SolutionField field(fstar, g, a, quad_spec.build());

  FieldOutput result;
  result.rows.resize(grid.points.size());
  parallel_for(grid.points.size(), [&](std::size_t i) {
    const Complex z = grid.points[i];
    const solver::JacobianData jd = field.jacobian(z);
    result.rows[i] = {z.real(), z.imag(), field.value(z), jd.fz, jd.fzbar};
  });

  // Certify on an interior subsample, where the residual stencil is well
  // inside the disk.
  std::vector<Complex> probes;
  for (const Complex& z : grid.points) {
    if (std::abs(z) <= 0.8) probes.push_back(z);
    if (probes.size() >= 48) break;
  }
  if (probes.empty()) probes = analysis::Grid::polar(4, 8, 0.7).points;
  std::vector<double> residuals(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) {
    const Complex r = analysis::delta_alpha_residual(
        [&](Complex z) { return field.value(z); }, probes[i], a);
    residuals[i] = std::abs(r - g(probes[i]));
  });
  for (double r : residuals) result.max_residual = std::max(result.max_residual, r);
  result.residual_points = probes.size();

  std::ostringstream csv;
  io::write_field_csv(csv, result.rows);
  write_text(out, csv.str());
  if (!summary_path.empty()) {
    write_text(summary_path, summary_json(result, alpha, grid.description, tol).dump(2) + "\n");
  }
  return result.max_residual <= tol ? kExitOk : kExitUncertified;
}

int run_series(const std::string& coeffs_path, const GridSpec& grid_spec, double tol,
               const std::string& out, const std::string& summary_path) {
  if (coeffs_path.empty()) throw DomainError("series: --coeffs is required");
  const auto s = io::parse_series_json(read_text(coeffs_path));
  const auto grid = grid_spec.build();

  FieldOutput result;
  result.rows.resize(grid.points.size());
  std::vector<double> residuals(grid.points.size(), 0.0);
  parallel_for(grid.points.size(), [&](std::size_t i) {
    const Complex z = grid.points[i];
    result.rows[i] = {z.real(), z.imag(), s.evaluate(z), s.dz(z), s.dzbar(z)};
    if (std::abs(z) <= 0.8) {
      residuals[i] = std::abs(analysis::delta_alpha_residual(
          [&](Complex w) { return s.evaluate(w); }, z, s.alpha()));
    }
  });
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (std::abs(grid.points[i]) <= 0.8) {
      result.max_residual = std::max(result.max_residual, residuals[i]);
      ++result.residual_points;
    }
  }

  std::ostringstream csv;
  io::write_field_csv(csv, result.rows);
  write_text(out, csv.str());
  if (!summary_path.empty()) {
    write_text(summary_path,
               summary_json(result, s.alpha().value(), grid.description, tol).dump(2) + "\n");
  }
  return result.max_residual <= tol ? kExitOk : kExitUncertified;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

solver::BoundaryData random_trig_poly(std::mt19937_64& gen, int degree) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::map<int, Complex> coeffs;
  for (int k = -degree; k <= degree; ++k) coeffs[k] = Complex(dist(gen), dist(gen));
  return solver::BoundaryData::fourier(std::move(coeffs));
}

struct VerifyArgs {
  double alpha = 0.0;
  std::string boundary_path;
  std::string source_spec;
  std::string series_path;
  std::string psi_spec = "rotation:0";
  int example1_k = 0;
  double p = 2.0;
  std::string radii_spec = "0.9,0.99,0.999";
  bool sharp_case = false;
  bool auto_center = false;
  int random_cases = 0;
  std::uint64_t seed = 1;
  GridSpec grid;
  QuadSpec quad;
  std::string out;
};

analysis::VerificationReport aggregate(std::vector<analysis::VerificationReport> reports,
                                       const std::string& suite_desc) {
  analysis::VerificationReport total = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    total.worst_slack = std::min(total.worst_slack, reports[i].worst_slack);
    total.passed = total.passed && reports[i].passed;
    total.violations.insert(total.violations.end(), reports[i].violations.begin(),
                            reports[i].violations.end());
  }
  total.grid = suite_desc;
  return total;
}

int emit_report(const analysis::VerificationReport& report, const std::string& out) {
  write_text(out, io::report_to_json(report) + "\n");
  return report.passed ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string& which, const VerifyArgs& args) {
  analysis::VerifyOptions opt;
  opt.quad = args.quad.build();
  opt.auto_center = args.auto_center;
  const analysis::Grid grid = args.grid.build();

  if (which == "schwarz" || which == "schwarz-pick") {
    const bool pick = which == "schwarz-pick";
    Alpha a(args.sharp_case ? 0.0 : args.alpha);
    auto g = args.sharp_case ? solver::SourceField::constant(-1.0)
             : args.source_spec.empty() ? solver::SourceField::zero()
                                        : solver::SourceField::parse(args.source_spec);
    const auto run_one = [&](const solver::BoundaryData& fstar) {
      return pick ? analysis::verify_schwarz_pick(fstar, g, a, grid, opt)
                  : analysis::verify_schwarz(fstar, g, a, grid, opt);
    };
    if (args.random_cases > 0) {
      std::mt19937_64 gen(args.seed);
      std::vector<analysis::VerificationReport> reports;
      for (int c = 0; c < args.random_cases; ++c) {
        reports.push_back(run_one(random_trig_poly(gen, 4)));
      }
      return emit_report(
          aggregate(std::move(reports), grid.description + ", " +
                                            std::to_string(args.random_cases) +
                                            " random cases, seed " + std::to_string(args.seed)),
          args.out);
    }
    const auto fstar =
        args.sharp_case ? solver::BoundaryData::zero() : load_boundary(args.boundary_path);
    return emit_report(run_one(fstar), args.out);
  }

  if (which == "heinz" || which == "colonna") {
    const auto fstar = load_boundary(args.boundary_path);
    const auto report = which == "heinz" ? analysis::verify_heinz(fstar, grid, opt)
                                         : analysis::verify_colonna(fstar, grid, opt);
    return emit_report(report, args.out);
  }

  if (which == "composition") {
    const auto psi = parse_psi(args.psi_spec);
    if (args.example1_k > 0) {
      const series::Example1Function f(args.example1_k, Alpha(args.alpha));
      // Keep the grid away from the puncture at 0.
      const analysis::Grid punctured =
          analysis::Grid::polar(6, 12, std::min(args.grid.r_max, 0.8), 0.2);
      return emit_report(analysis::verify_composition(f, psi, punctured, opt), args.out);
    }
    if (args.series_path.empty()) {
      throw DomainError("verify composition: need --series FILE or --example1 K");
    }
    const auto s = io::parse_series_json(read_text(args.series_path));
    return emit_report(analysis::verify_composition(s, psi, grid, opt), args.out);
  }

  if (which == "bergman") {
    if (args.series_path.empty()) throw DomainError("verify bergman: --series is required");
    const auto s = io::parse_series_json(read_text(args.series_path));
    std::vector<double> radii;
    std::stringstream ss(args.radii_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        radii.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw DomainError("verify bergman: bad radius '" + item + "'");
      }
    }
    const auto check = analysis::bergman_membership_check(
        analysis::jet_of(s), s.alpha(), args.p, radii, grid,
        quad::DiskRule(opt.quad.radial_order, opt.quad.angular_order));
    json doc = json::parse(io::report_to_json(check.report));
    doc["radii"] = check.radii;
    doc["truncated_integrals"] = check.truncated_integrals;
    doc["norm"] = check.norm;
    doc["hypothesis_ok"] = check.hypothesis_ok;
    doc["monotone"] = check.monotone;
    write_text(args.out, doc.dump(2) + "\n");
    return check.report.passed ? kExitOk : kExitVerifyFailed;
  }

  throw DomainError("verify: unknown theorem '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-Laplace toolkit for the unit disk"};
  app.require_subcommand(1);

  // kernel ------------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "Evaluate kernel functions");
  kernel->require_subcommand(1);
  KernelArgs kargs;
  std::vector<CLI::App*> kernel_subs;
  for (const char* name : {"poisson", "green", "h", "phi"}) {
    auto* sub = kernel->add_subcommand(name);
    sub->add_option("--alpha", kargs.alpha, "Weight exponent (> -1)");
    sub->add_option("--z", kargs.z, "Point re[,im]; repeatable");
    sub->add_option("--w", kargs.w, "Second point re[,im]; repeatable");
    sub->add_option("--s", kargs.s, "Radial argument in [0,1); repeatable");
    sub->add_option("--tol", kargs.tol, "Series tolerance");
    sub->add_option("--points", kargs.points_file, "CSV file of evaluation points");
    sub->add_option("--out", kargs.out, "Output CSV path (default stdout)");
    kernel_subs.push_back(sub);
  }

  // solve ---------------------------------------------------------------
  auto* solve_cmd = app.add_subcommand("solve", "Solve the Dirichlet problem on a grid");
  double alpha = 0.0;
  std::string boundary_path, source_spec, out_path, summary_path;
  GridSpec grid_spec;
  QuadSpec quad_spec;
  double tol = 1e-4;
  solve_cmd->add_option("--alpha", alpha, "Weight exponent (> -1)")->required();
  solve_cmd->add_option("--boundary", boundary_path, "Boundary data JSON");
  solve_cmd->add_option("--source", source_spec, "Source spec (zero|const:..|bump:..|...)");
  solve_cmd->add_option("--grid", grid_spec.spec, "Grid: polar:NRxNT or cart:STEP");
  solve_cmd->add_option("--r-max", grid_spec.r_max, "Grid radius bound (< 1)");
  solve_cmd->add_option("--circle", quad_spec.circle, "Circle rule order");
  solve_cmd->add_option("--radial", quad_spec.radial, "Radial rule order");
  solve_cmd->add_option("--angular", quad_spec.angular, "Angular rule order");
  solve_cmd->add_option("--tol", tol, "Residual certification tolerance");
  solve_cmd->add_option("--out", out_path, "Field CSV path (default stdout)");
  solve_cmd->add_option("--summary", summary_path, "Summary JSON path");

  // series --------------------------------------------------------------
  auto* series_cmd = app.add_subcommand("series", "Evaluate a homogeneous expansion");
  std::string coeffs_path;
  series_cmd->add_option("--coeffs", coeffs_path, "Coefficient JSON")->required();
  series_cmd->add_option("--grid", grid_spec.spec, "Grid: polar:NRxNT or cart:STEP");
  series_cmd->add_option("--r-max", grid_spec.r_max, "Grid radius bound (< 1)");
  series_cmd->add_option("--tol", tol, "Residual certification tolerance");
  series_cmd->add_option("--out", out_path, "Field CSV path (default stdout)");
  series_cmd->add_option("--summary", summary_path, "Summary JSON path");

  // verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Certify an inequality or identity");
  verify->require_subcommand(1);
  VerifyArgs vargs;
  std::vector<CLI::App*> verify_subs;
  for (const char* name :
       {"schwarz", "schwarz-pick", "heinz", "colonna", "composition", "bergman"}) {
    auto* sub = verify->add_subcommand(name);
    verify_subs.push_back(sub);
    sub->add_option("--alpha", vargs.alpha, "Weight exponent (>= 0 for the bounds)");
    sub->add_option("--boundary", vargs.boundary_path, "Boundary data JSON");
    sub->add_option("--source", vargs.source_spec, "Source spec");
    sub->add_option("--series", vargs.series_path, "Coefficient JSON");
    sub->add_option("--psi", vargs.psi_spec, "Composition map (rotation:T|dilation:A|square)");
    sub->add_option("--example1", vargs.example1_k, "Use the singular family with this k");
    sub->add_option("--p", vargs.p, "Bergman exponent (>= 2)");
    sub->add_option("--radii", vargs.radii_spec, "Truncation radii, comma separated");
    sub->add_flag("--sharp-case", vargs.sharp_case, "Preset: alpha=0, f*=0, g=-1");
    sub->add_flag("--auto-center", vargs.auto_center, "Subtract the constant mode of f*");
    sub->add_option("--random", vargs.random_cases, "Run N random boundary-data cases");
    sub->add_option("--seed", vargs.seed, "Seed for the random suite");
    sub->add_option("--grid", vargs.grid.spec, "Grid: polar:NRxNT or cart:STEP");
    sub->add_option("--r-max", vargs.grid.r_max, "Grid radius bound (< 1)");
    sub->add_option("--circle", vargs.quad.circle, "Circle rule order");
    sub->add_option("--radial", vargs.quad.radial, "Radial rule order");
    sub->add_option("--angular", vargs.quad.angular, "Angular rule order");
    sub->add_option("--out", vargs.out, "Report JSON path (default stdout)");
  }
  vargs.grid.spec = "polar:8x16";
  vargs.grid.r_max = 0.9;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (kernel->parsed()) {
      for (auto* sub : kernel_subs) {
        if (sub->parsed()) return run_kernel(sub->get_name(), kargs);
      }
    }
    if (solve_cmd->parsed()) {
      return run_solve(alpha, boundary_path, source_spec, grid_spec, quad_spec, tol, out_path,
                       summary_path);
    }
    if (series_cmd->parsed()) {
      return run_series(coeffs_path, grid_spec, tol, out_path, summary_path);
    }
    if (verify->parsed()) {
      for (auto* sub : verify_subs) {
        if (sub->parsed()) return run_verify(sub->get_name(), vargs);
      }
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NonconvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitDomain;
}
