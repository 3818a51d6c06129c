#pragma once

// Root localization and complex-analytic certificates:
//  * unit-circle zeros of p(z) = q(z) + z^N q(1/z) bracketed on the arcs
//    I_j = [pi/(2M) + pi j/M, pi/(2M) + pi (j+1)/M], N = 2M, through the real
//    function 2 Re(e^{-iM theta} q(e^{i theta}));
//  * simultaneous (Aberth) refinement of all roots as an independent check;
//  * argument-principle winding counts, boundary minima, Rouche comparison;
//  * the sup of |sin 2 pi z - q(z)| on a circle.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppz/mp/complex.hpp"
#include "ppz/mp/real.hpp"
#include "ppz/period_poly.hpp"

namespace ppz {

using AnalyticFn = std::function<mp::Complex(const mp::Complex&)>;

class ContourError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootRefinementError : public std::runtime_error {
 public:
  RootRefinementError(const std::string& what, std::vector<mp::Complex> starts)
      : std::runtime_error(what), starts_(std::move(starts)) {}
  const std::vector<mp::Complex>& offending_starts() const { return starts_; }

 private:
  std::vector<mp::Complex> starts_;
};

struct Contour {
  enum class Kind { circle, annulus_boundary };
  Kind kind = Kind::circle;
  std::vector<mp::Real> radii;  // one radius, or {inner, outer}
  int samples = 1024;           // initial samples per circle

  static Contour circle(mp::Real radius, int samples = 1024);
  static Contour annulus(mp::Real inner, mp::Real outer, int samples = 1024);
  Contour with_samples(int n) const {
    Contour c = *this;
    c.samples = n;
    return c;
  }
  mp::Precision precision() const { return radii.front().precision(); }
};

// 2 cos(M t) Re q(e^{it}) + 2 sin(M t) Im q(e^{it})
mp::Real real_circle_function(const RealPoly& q, int M, const mp::Real& theta);

struct CircleZeros {
  int M = 0;
  std::vector<mp::Real> angles;        // ascending, in [0, 2 pi)
  std::vector<int> interval_hits;      // zeros found in I_j, j = 0 .. 2M-1
  std::vector<int> skipped_intervals;  // j where Im q(e^{it}) changes sign or vanishes
  std::vector<int> lattice_hits;       // j with Im q(e^{i theta_j}) = 0 (exact zero at theta_j)
  int certified_by_sign_change = 0;
};

// Brackets every sign change of real_circle_function(q, N/2, .) and refines
// it to 2^(-prec/2) in theta. Never throws for incomplete localization.
CircleZeros circle_zeros_by_intervals(const RealPoly& q, int N);

struct RootCluster {
  mp::Complex center;
  int multiplicity = 1;
};

struct RootRefinement {
  std::vector<mp::Complex> roots;  // deg entries
  std::vector<RootCluster> clusters;
  int iterations = 0;
};

// Aberth iteration from starts on circles of radius 1/2, 1 and 2; a double
// precision pass followed by polishing at prec + 64 bits until every step is
// below 2^(-prec/2). Roots closer than 2^(-prec/4) are clustered.
RootRefinement refine_all_roots(const RealPoly& p);

struct WindingResult {
  long winding = 0;
  double snap_distance = 0.0;
  long evaluations = 0;
};

// Total phase change / 2 pi; outer minus inner circle for an annulus.
WindingResult winding_count(const AnalyticFn& fn, const Contour& contour);

struct BoundaryMin {
  mp::Real value;
  mp::Complex point;
};

BoundaryMin boundary_min(const AnalyticFn& fn, const Contour& contour);

struct BoundaryMax {
  mp::Real value;
  mp::Complex point;
};

BoundaryMax boundary_max(const AnalyticFn& fn, const Contour& contour);

struct RoucheReport {
  mp::Real max_difference;  // max |f - g| on the contour
  mp::Real min_reference;   // min |g| on the contour
  bool verified = false;
  std::optional<long> winding_f;
  std::optional<long> winding_g;
  bool windings_equal = false;
};

RoucheReport rouche_compare(const AnalyticFn& f, const AnalyticFn& g, const Contour& contour);

// sup_{|z| = radius} |sin 2 pi z - q(z)|.
BoundaryMax sin_approx_sup(const RealPoly& q, const mp::Real& radius, int samples = 2048);

// sin(2 pi z) - sin(2 pi / z)
AnalyticFn annulus_reference_function();
// q(z) - q(1/z)
AnalyticFn q_difference_function(const RealPoly& q);

struct ImagPartZeros {
  int sign_changes = 0;       // on [0, 2 pi), sampled
  mp::Real at_zero;           // Im q(1)
  mp::Real at_pi;             // Im q(-1)
};

ImagPartZeros imag_part_zeros(const RealPoly& q, int samples = 4096);

struct ZeroReport {
  int weight = 0;
  int form_index = 0;
  TrivialZeroCertificate trivial;
  CircleZeros circle;
  int n_circle_zeros = 0;        // nontrivial zeros bracketed on |z| = 1
  int n_refined_on_circle = 0;   // nontrivial refined roots with ||rho| - 1| < circle_threshold
  int n_refined_trivial = 0;     // refined roots matched to {0, +-1/2, +-1, +-2} with multiplicity
  bool trivial_multiplicities_ok = false;
  mp::Real max_modulus_deviation;     // over nontrivial refined roots
  mp::Real max_cross_angle_gap;       // bracketed angles vs refined arguments
  std::vector<mp::Complex> off_circle_roots;  // nontrivial roots failing the threshold
  bool accounted = false;
};

struct ZeroReportOptions {
  double circle_threshold = 1e-20;
};

// Full zero accounting for r = r_f^- (degree w-1) with its half q = q_f.
ZeroReport zero_report(int weight, int form_index, const RealPoly& r, const RealPoly& q,
                       const ZeroReportOptions& options = {});

struct TrivialRootClassification {
  std::vector<mp::Complex> nontrivial;
  int trivial_count = 0;
  bool multiplicities_ok = false;
};

// Splits refined roots into the trivial set {0, +-1/2, +-2 simple, +-1 double}
// and the rest, matching within tol.
TrivialRootClassification classify_trivial_roots(const std::vector<mp::Complex>& roots, const mp::Real& tol);

}  // namespace ppz
