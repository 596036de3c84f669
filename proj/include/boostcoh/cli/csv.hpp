#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "boostcoh/cli/sweep.hpp"

namespace boostcoh::cli {

inline constexpr const char* kCsvHeader =
    "sigma_mev,beta1,beta2,n,theta,c_l1,c_f_perturbative,c_f_exact_eig,c_f_quadrature,f1,f2";

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Header plus one LF-terminated line per row; absent values are empty.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Inverse of write_csv. Throws DomainError on a malformed file.
std::vector<SweepRow> read_csv(std::istream& is);

/// Writes to `path` through a temporary file that is renamed on success
/// and removed on failure.
void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace boostcoh::cli
