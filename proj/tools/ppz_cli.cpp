#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <utility>

#include "ppz/report.hpp"

namespace fs = std::filesystem;
using ppz::report::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to DIR/name when --out is set, else to stdout.
void emit(const json& doc, const std::string& out_dir, const std::string& name) {
  const std::string text = doc.dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / name;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os << text;
  std::cerr << "wrote " << path.string() << "\n";
}

std::string grid_path(const std::string& out_dir, const std::string& name) {
  if (out_dir.empty()) return name;
  fs::create_directories(out_dir);
  return (fs::path(out_dir) / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period polynomials of level-one Hecke eigenforms: zeros on the unit circle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ppz::report::kToolVersion);

  std::string weights = "12..32";
  std::string grid_text;
  long prec_bits = 0;
  int terms = 0;
  int threads = 0;
  std::string out_dir;
  int form_index = 0;
  int bern_n = 2, bern_w = 10;
  int count = 20;
  int samples = 512;
  bool emit_grid = false;

  const auto common = [&](CLI::App* sub, bool with_weights) {
    if (with_weights) sub->add_option("--weights", weights, "Even weights A..B (inclusive) or a single weight");
    sub->add_option("--prec-bits", prec_bits, "Working precision in bits (default max(192, 6k))");
    sub->add_option("--terms", terms, "Dirichlet/Gamma series terms (default from the tail bound)");
    sub->add_option("--out", out_dir, "Output directory (default: JSON to stdout)");
  };

  auto* verify = app.add_subcommand("verify", "Full certificate pipeline over a weight range");
  common(verify, true);
  verify->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  auto* annulus = app.add_subcommand("lemma-s", "Zero count of sin 2 pi z - sin 2 pi / z in 4/5 <= |z| <= 5/4");
  annulus->add_option("--out", out_dir, "Output directory");
  annulus->add_option("--samples", samples, "Samples per boundary circle");
  annulus->add_flag("--emit-grid", emit_grid, "Also write the log10|S| grid as CSV");
  annulus->add_option("--grid", grid_text, "XMIN,XMAX,YMIN,YMAX,NX,NY");

  auto* plot = app.add_subcommand("plotgrid", "CSV grid of log10 |r_f^-(x + iy)|");
  common(plot, true);
  plot->add_option("--form", form_index, "Eigenform index (ascending T_2 eigenvalue)");
  plot->add_option("--grid", grid_text, "XMIN,XMAX,YMIN,YMAX,NX,NY (default -2.5,2.5,-2.5,2.5,501,501)");

  auto* bern = app.add_subcommand("bernoulli", "Roots of the period polynomial of R_n");
  bern->add_option("--n", bern_n, "Even index n, 0 < n < w")->required();
  bern->add_option("--w", bern_w, "Even weight w = k - 2")->required();
  bern->add_option("--prec-bits", prec_bits, "Precision in bits (default 256)");
  bern->add_option("--out", out_dir, "Output directory");

  auto* eig = app.add_subcommand("eigenforms", "Hecke eigenform coefficients");
  common(eig, true);
  eig->add_option("--count", count, "Coefficients a(1..count) to print");

  auto* lv = app.add_subcommand("lvalues", "Critical L-values with tail bounds");
  common(lv, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    ppz::report::VerifyConfig cfg;
    try {
      const auto [lo, hi] = ppz::report::parse_weight_range(weights);
      cfg.weight_min = lo;
      cfg.weight_max = hi;
      cfg.prec_bits = prec_bits;
      cfg.n_terms = terms;
      cfg.threads = threads;
      cfg.out_dir = out_dir;
      if (!grid_text.empty()) cfg.grid = ppz::grid::parse_grid(grid_text);
      if (!bern->parsed()) ppz::report::validate(cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    ppz::report::Outcome res;
    if (verify->parsed()) {
      res = ppz::report::run_verify(cfg);
      emit(res.doc, out_dir, "verify.json");
    } else if (annulus->parsed()) {
      ppz::report::AnnulusOptions opt;
      opt.samples = samples;
      if (samples < 16) throw UsageError("samples must be >= 16");
      res = ppz::report::annulus_certificate(opt);
      ppz::report::json head;
      head["schema_version"] = ppz::report::kSchemaVersion;
      head["tool_version"] = ppz::report::kToolVersion;
      head["command"] = "lemma-s";
      head.update(res.doc);
      res.doc = std::move(head);
      if (emit_grid || !grid_text.empty()) {
        const std::string path = grid_path(out_dir, "annulus_grid.csv");
        ppz::report::write_reference_grid(cfg.grid, path);
        res.doc["csv"] = path;
        res.doc["highlight_level"] = ppz::grid::decimal(std::log10(1.5));
      }
      emit(res.doc, out_dir, "annulus.json");
    } else if (plot->parsed()) {
      if (cfg.weight_min != cfg.weight_max) throw UsageError("plotgrid takes a single weight");
      const std::string name =
          "plotgrid_k" + std::to_string(cfg.weight_min) + "_f" + std::to_string(form_index) + ".csv";
      try {
        res = ppz::report::run_plotgrid(cfg.weight_min, form_index, cfg, grid_path(out_dir, name));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(res.doc, out_dir, "plotgrid_k" + std::to_string(cfg.weight_min) + "_f" + std::to_string(form_index) +
                                 ".json");
    } else if (bern->parsed()) {
      try {
        res = ppz::report::run_bernoulli(bern_n, bern_w, prec_bits);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(res.doc, out_dir, "bernoulli_n" + std::to_string(bern_n) + "_w" + std::to_string(bern_w) + ".json");
    } else if (eig->parsed()) {
      if (count < 1) throw UsageError("count must be positive");
      res = ppz::report::run_eigenforms(cfg, count);
      emit(res.doc, out_dir, "eigenforms.json");
    } else if (lv->parsed()) {
      res = ppz::report::run_lvalues(cfg);
      emit(res.doc, out_dir, "lvalues.json");
    }
    return res.pass ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
