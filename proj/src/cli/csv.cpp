#include "boostcoh/cli/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace boostcoh::cli {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

double parse_double(const std::string& field, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
    throw DomainError("csv line " + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

std::optional<double> parse_opt(const std::string& field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  return parse_double(field, line);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.sigma) << ',' << format_double(r.beta1) << ',' << opt(r.beta2) << ','
       << r.n << ',' << format_double(r.theta) << ',' << format_double(r.c_l1) << ','
       << opt(r.c_f_perturbative) << ',' << opt(r.c_f_exact_eig) << ',' << opt(r.c_f_quadrature)
       << ',' << format_double(r.f1) << ',' << opt(r.f2) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw DomainError("csv: missing or wrong header");
  std::vector<SweepRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 11) throw DomainError("csv line " + std::to_string(lineno) + ": expected 11 fields");
    SweepRow r;
    r.sigma = parse_double(f[0], lineno);
    r.beta1 = parse_double(f[1], lineno);
    r.beta2 = parse_opt(f[2], lineno);
    r.n = static_cast<int>(parse_double(f[3], lineno));
    r.theta = parse_double(f[4], lineno);
    r.c_l1 = parse_double(f[5], lineno);
    r.c_f_perturbative = parse_opt(f[6], lineno);
    r.c_f_exact_eig = parse_opt(f[7], lineno);
    r.c_f_quadrature = parse_opt(f[8], lineno);
    r.f1 = parse_double(f[9], lineno);
    r.f2 = parse_opt(f[10], lineno);
    rows.push_back(r);
  }
  return rows;
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
  const std::string tmp = path + ".tmp";
  try {
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (!os) throw DomainError("cannot open '" + tmp + "' for writing");
      write_csv(os, rows);
      os.flush();
      if (!os) throw DomainError("write to '" + tmp + "' failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace boostcoh::cli
