#include "alphakit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace alphakit::io {

using nlohmann::json;

namespace {

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_or_domain_error(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

Complex complex_from_json(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw DomainError(std::string(what) + ": complex values are [re, im] pairs");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

std::map<int, Complex> coeff_map_from_json(const json& obj, const char* what) {
  if (!obj.is_object()) throw DomainError(std::string(what) + ": expected an object of coefficients");
  std::map<int, Complex> coeffs;
  for (const auto& [key, value] : obj.items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError(std::string(what) + ": coefficient key '" + key + "' is not an integer");
    }
    coeffs[k] = complex_from_json(value, what);
  }
  return coeffs;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& out, const std::vector<FieldRow>& rows) {
  out << "x,y,f_re,f_im,fz_re,fz_im,fzbar_re,fzbar_im\n";
  for (const FieldRow& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.f.real())
        << ',' << format_double(r.f.imag()) << ',' << format_double(r.fz.real()) << ','
        << format_double(r.fz.imag()) << ',' << format_double(r.fzbar.real()) << ','
        << format_double(r.fzbar.imag()) << '\n';
  }
}

std::vector<FieldRow> read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("field CSV: empty stream");
  if (line != "x,y,f_re,f_im,fz_re,fz_im,fzbar_re,fzbar_im") {
    throw DomainError("field CSV: unexpected header '" + line + "'");
  }
  std::vector<FieldRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    double v[8];
    std::string item;
    for (int i = 0; i < 8; ++i) {
      if (!std::getline(ss, item, ',')) throw DomainError("field CSV: short row '" + line + "'");
      try {
        v[i] = std::stod(item);
      } catch (const std::exception&) {
        throw DomainError("field CSV: bad number '" + item + "'");
      }
    }
    rows.push_back({v[0], v[1], Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7])});
  }
  return rows;
}

void write_field_csv_file(const std::string& path, const std::vector<FieldRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_field_csv(out, rows);
}

std::vector<FieldRow> read_field_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_field_csv(in);
}

solver::BoundaryData parse_boundary_json(const std::string& text) {
  const json doc = parse_or_domain_error(text, "boundary JSON");
  if (doc.contains("fourier")) {
    return solver::BoundaryData::fourier(coeff_map_from_json(doc["fourier"], "boundary JSON"));
  }
  if (doc.contains("samples")) {
    const json& arr = doc["samples"];
    if (!arr.is_array() || arr.empty()) {
      throw DomainError("boundary JSON: 'samples' must be a nonempty array");
    }
    std::vector<Complex> samples;
    samples.reserve(arr.size());
    for (const auto& v : arr) samples.push_back(complex_from_json(v, "boundary JSON"));
    return solver::BoundaryData::samples(samples);
  }
  throw DomainError("boundary JSON: expected a 'fourier' or 'samples' key");
}

solver::BoundaryData read_boundary_json_file(const std::string& path) {
  return parse_boundary_json(read_all(path));
}

series::AlphaHarmonicSeries parse_series_json(const std::string& text) {
  const json doc = parse_or_domain_error(text, "coefficient JSON");
  if (!doc.contains("alpha") || !doc["alpha"].is_number()) {
    throw DomainError("coefficient JSON: missing numeric 'alpha'");
  }
  if (!doc.contains("coeffs")) {
    throw DomainError("coefficient JSON: missing 'coeffs'");
  }
  const Alpha alpha(doc["alpha"].get<double>());
  series::CoefficientSequence coeffs(coeff_map_from_json(doc["coeffs"], "coefficient JSON"));
  return series::AlphaHarmonicSeries(std::move(coeffs), alpha);
}

series::AlphaHarmonicSeries read_series_json_file(const std::string& path) {
  return parse_series_json(read_all(path));
}

std::string series_to_json(const series::AlphaHarmonicSeries& s) {
  json coeffs = json::object();
  for (const auto& [k, c] : s.coefficients().entries()) {
    coeffs[std::to_string(k)] = {c.real(), c.imag()};
  }
  json doc;
  doc["alpha"] = s.alpha().value();
  doc["coeffs"] = coeffs;
  return doc.dump(2);
}

std::string report_to_json(const analysis::VerificationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  json doc;
  doc["theorem_id"] = analysis::to_string(report.theorem_id);
  doc["grid"] = report.grid;
  doc["tolerance"] = report.tolerance;
  doc["worst_slack"] = report.worst_slack;
  doc["violations"] = violations;
  doc["passed"] = report.passed;
  return doc.dump(2);
}

analysis::VerificationReport parse_report_json(const std::string& text) {
  const json doc = parse_or_domain_error(text, "report JSON");
  analysis::VerificationReport report;
  report.theorem_id = analysis::theorem_id_from_string(doc.at("theorem_id").get<std::string>());
  report.grid = doc.at("grid").get<std::string>();
  report.tolerance = doc.at("tolerance").get<double>();
  report.worst_slack = doc.at("worst_slack").get<double>();
  for (const auto& v : doc.at("violations")) {
    report.violations.push_back({v.at("x").get<double>(), v.at("y").get<double>(),
                                 v.at("lhs").get<double>(), v.at("rhs").get<double>()});
  }
  report.passed = doc.at("passed").get<bool>();
  return report;
}

}  // namespace alphakit::io
