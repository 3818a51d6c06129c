#pragma once

// Verification pipeline and JSON/CSV emitters behind the ppz command line.
// Every floating value in a report is a decimal string.

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppz/grid/grid_kernels.hpp"
#include "ppz/hecke_eigen.hpp"
#include "ppz/lfunction.hpp"
#include "ppz/period_poly.hpp"
#include "ppz/zero_engine.hpp"

namespace ppz::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "0.1.0";

struct VerifyConfig {
  int weight_min = 12;
  int weight_max = 12;
  long prec_bits = 0;  // 0: max(192, 6k) per weight
  int n_terms = 0;     // 0: derived from the tail bound
  int threads = 0;     // 0: hardware concurrency
  std::string out_dir;
  grid::GridSpec grid;
};

// Inclusive even range "A..B" or a single weight "A".
std::pair<int, int> parse_weight_range(const std::string& text);
void validate(const VerifyConfig& cfg);

long prec_for(const VerifyConfig& cfg, int k);

struct Outcome {
  json doc;
  bool pass = false;
};

// Annulus certificate for sin 2 pi z - sin 2 pi / z on 4/5 <= |z| <= 5/4.
struct AnnulusOptions {
  int samples = 512;
  mp::Precision precision = 128;
};
Outcome annulus_certificate(const AnnulusOptions& opt = {});

// Full per-form pipeline.
Outcome verify_form(const Eigenform& f, int form_index, int dim, const VerifyConfig& cfg);
Outcome run_verify(const VerifyConfig& cfg);

// log10 |r_f^-| over the grid, written to `path`.
Outcome run_plotgrid(int k, int form_index, const VerifyConfig& cfg, const std::string& path);
// The S(z) grid.
void write_reference_grid(const grid::GridSpec& g, const std::string& path);

Outcome run_bernoulli(int n, int w, long prec_bits);
Outcome run_eigenforms(const VerifyConfig& cfg, int count);
Outcome run_lvalues(const VerifyConfig& cfg);

std::string dec(const mp::Real& x);
json complex_json(const mp::Complex& z, int digits = 40);

}  // namespace ppz::report
