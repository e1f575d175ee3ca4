#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace worm3 {

struct CertifySection {
  std::string profile = "main";  // main | zero | convex_sum | separable | char_square
  double mu = 3.2;
  double mu_prime = 8.0;
  double b_factor = 1.01;
  double a_over_b = 1.2;
  std::int64_t samples = 10000;
  std::int64_t grid = 200;
  std::int64_t select_grid = 400;
  double tol = 1e-9;
  double dilation = 0.05;
  std::int64_t sweep_steps = 20;
};

struct SelectSection {
  double mu = 3.2;
  double b_factor = 1.01;
  double a_over_b = 1.2;
  std::int64_t grid = 400;
  double delta = 0.05;
};

struct KernelSection {
  double mu = 3.14159265358979323846;
  std::vector<double> re{-12, -10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10, 12};
  std::vector<double> im{0.0};
  double rel_tol = 1e-10;
  double tail_tol = 1e-12;
};

struct NormsSection {
  double mu = 3.14159265358979323846;
  std::vector<double> a{0.0, -0.5, -1.0};
  std::vector<double> b{0.0};
  std::vector<std::int64_t> j{-1};
  std::vector<std::int64_t> k{-1};
  std::int64_t mc_samples = 0;  // 0 disables the Monte Carlo columns
};

struct NebenhulleSection {
  double mu = 14.0;
  std::int64_t nodes = 512;
};

struct RunConfig {
  std::uint64_t seed = 1;
  int threads = 0;  // 0 keeps the OpenMP default
  CertifySection certify;
  SelectSection select;
  KernelSection kernel;
  NormsSection norms;
  NebenhulleSection nebenhulle;
};

/// Parses an INI-style file: sections [run], [certify], [select], [kernel],
/// [norms], [nebenhulle]. Unknown sections or keys, malformed numbers,
/// non-positive tolerances and resolutions below 8 raise ConfigError.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

}  // namespace worm3
