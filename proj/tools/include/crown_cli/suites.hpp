#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crown_cli/report.hpp"

namespace crown::cli {

/// Invalid target specification (root system, algebra, pair label, parameter).
struct TargetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteResult {
  Report report;
  std::string csv;  ///< empty when the suite has no curve output
};

struct CatalogEntry {
  std::string suite;
  std::string module;
  std::string operation;
  std::string paper_anchor;
  std::string command;
};

/// Stable catalog of runnable suites.
const std::vector<CatalogEntry>& catalog();
SuiteResult list_suites();

/// `type` is a name ("E8", "B3"), a label combined with `rank` ("B", 3), or a
/// path ending in .json holding a serialized root system.
/// `convention` is canonical, dual or both.
SuiteResult verify_roots(const std::string& type, int rank, const std::string& convention);
SuiteResult verify_omega();

struct JordanRun {
  std::string algebra = "sym:3";
  int samples = 100;           ///< member points for Hessian and certificate checks
  int identity_samples = 1000;  ///< random samples per operator identity
  std::uint64_t seed = 1;
  double tol = 1e-6;           ///< finite-difference acceptance
};
SuiteResult verify_jordan(const JordanRun& run);
SuiteResult jordan_hessian(const JordanRun& run);

SuiteResult verify_hermitian(std::uint64_t seed, int samples);
SuiteResult classify(const std::string& pair);

struct AppendixRun {
  std::string which = "so_pq";
  int p = 2, q = 3, n = 4;
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::vector<std::complex<double>> z;  ///< fixed strip point; empty draws `samples` random ones
};
SuiteResult appendix(const AppendixRun& run);

/// Parses "1.0i", "-2i", "i", "0.5", "0.5+1i", "0.25-0.5i".
std::complex<double> parse_complex(const std::string& s);

SuiteResult sl2_spherical(std::complex<double> lambda, double theta, int nodes, std::uint64_t seed);
/// probe: all, mass, positivity, fourier (alias 6.7), semigroup.
SuiteResult sl2_heat(double t, const std::string& probe, double s);
SuiteResult sl2_blowup(std::complex<double> lambda, double eps_min);
SuiteResult sl2_transform(double t, double width, std::uint64_t seed);

SuiteResult geom_density(const std::string& type, int rank, int samples, std::uint64_t seed);
SuiteResult geom_metric(const std::string& type, int rank, int samples, std::uint64_t seed);

}  // namespace crown::cli
