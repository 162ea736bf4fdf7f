#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"

namespace escobar {

/// Margin used by the symmetrization audits.
inline constexpr double kAuditMargin = 1e-12;

enum class SymmetryCenter {
  kEdgeMidpoint,  // type I
  kVertex,        // type II
};

const char* to_string(SymmetryCenter center);

/// Cap of exterior length `length` on a regular polygon, centred on the
/// midpoint of edge 0 or on junction 0. Any length in (0, perimeter) is accepted.
Cap symmetric_cap(const PlanarDomain& polygon, double length, SymmetryCenter center);

/// η of symmetric_cap on make_regular_polygon(n).
double symmetric_eta(int n, double length, SymmetryCenter center);

struct SymmetrizedRegion {
  Cap base;
  Cap type_one;
  Cap type_two;
  double exterior = 0.0;
  double base_eta = 0.0;
  double type_one_eta = 0.0;
  double type_two_eta = 0.0;
  // Chord lies on the boundary (both ends on one edge); η is the limiting value 1.
  bool type_one_degenerate = false;
  bool type_two_degenerate = false;
};

/// Both symmetrizations of a cap in a regular polygon. Throws not-applicable
/// for other domains or when the exterior is longer than half the perimeter.
SymmetrizedRegion symmetrize(const PlanarDomain& polygon, const Cap& base);

struct CheckResult {
  bool ok = true;
  double margin = 0.0;  // slack of the inequality; negative when violated
  std::string detail;
};

/// min(η(type I), η(type II)) ≤ η(base).
CheckResult symmetrization_inequality_check(const PlanarDomain& polygon, const Cap& base,
                                            double margin = kAuditMargin);

/// η(Λ₂) ≤ η(Λ₁) for both symmetrizations, Λ₁ ≤ Λ₂ ≤ perimeter/2.
CheckResult monotonicity_check(int n, double shorter, double longer,
                               double margin = kAuditMargin);

/// Length where η(type I) and η(type II) cross on make_regular_polygon(n):
/// 2s(1 + cos(π/n))/(1 + 2cos(π/n)) with s the edge length.
double crossover_threshold(int n);

/// The closed-form constant 2s·sin²(π/n)/(1 + cos(π/n) − cos²(π/n)) that is
/// often quoted for the same crossover. It does not match the geometry.
double published_crossover_constant(int n);

/// Crossover located by bisection on η(type I) − η(type II) over [s, 2s].
double bisect_crossover(int n, double tolerance = 1e-15);

/// Sign contract at one length: type I is the smaller for Λ ≥ crossover
/// (up to 2s), the larger below it.
CheckResult crossover_check(int n, double length, double margin = kAuditMargin);

/// η of the symmetric cap of length L₀ whose ends sit at edge midpoints.
/// Requires L₀ to be a multiple of the edge length in [s, ns/2].
double lower_envelope(int n, double reference_length);

struct AuditConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double margin = kAuditMargin;
  unsigned threads = 0;  // 0 uses hardware concurrency
};

struct SuiteReport {
  std::string name;
  int n = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  std::string worst_detail;
  bool ok() const { return failures == 0; }
};

/// Random caps with η ≥ envelope for exterior length below L₀.
SuiteReport lower_envelope_check(int n, double reference_length, const AuditConfig& config = {});

SuiteReport audit_symmetrization(int n, const AuditConfig& config = {});
SuiteReport audit_monotonicity(int n, const AuditConfig& config = {});
SuiteReport audit_crossover(int n, const AuditConfig& config = {});

/// All suites for D_n, the envelope suite once per admissible L₀.
std::vector<SuiteReport> symmetry_audit(int n, const AuditConfig& config = {});

}  // namespace escobar
