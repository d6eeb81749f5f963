#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rtc/braid.hpp"

namespace rtc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// H_{a,b}(x, y) = (a - x^2 - b y, x); orientation preserving for b > 0.
struct HenonParams {
  double a = 0.0;
  double b = 0.3;
};

Point henon_step(const HenonParams& p, Point z);

/// Jacobian [[-2x, -b], [1, 0]] as a flat 2x2.
std::array<double, 4> henon_jacobian(const HenonParams& p, Point z);

struct MapOrbit {
  int period = 1;
  std::vector<Point> points;               // p_{i+1} = f(p_i), cyclic
  double residual = 0.0;                   // max |f(p_i) - p_{i+1 mod k}|
  std::array<std::complex<double>, 2> multipliers{};  // Floquet multipliers
};

struct OrbitSolverConfig {
  double tolerance = 1e-11;
  int max_newton_iterations = 200;
};

/// Newton iteration on f^k(z) - z with chain-rule Jacobian. Verifies the
/// minimal period (no proper divisor closes within 10x tolerance).
MapOrbit find_periodic_orbit(const HenonParams& p, int period, Point seed,
                             const OrbitSolverConfig& cfg = {});

/// Newton continuation of an orbit along a in small steps.
MapOrbit continue_orbit(const MapOrbit& orbit, double b, double from_a,
                        double to_a, const OrbitSolverConfig& cfg = {},
                        double max_step = 2e-3);

/// Refine the parameter at which the orbit's real multiplier crosses -1,
/// bracketed by [p0.a, p1.a] (same b). Bisection to `param_tol`.
double detect_period_doubling(const HenonParams& p0, const HenonParams& p1,
                              const MapOrbit& orbit,
                              double param_tol = 1e-10,
                              const OrbitSolverConfig& cfg = {});

struct ProjectionConfig {
  double angle = 0.0;          // projection direction theta, radians
  int steps = 64;              // interpolation substeps per iteration, >= 2
  double tolerance = 1e-9;     // coincidence tolerance
  int max_angle_retries = 16;  // golden-angle rotations on coincidence
};

struct ParameterPath {
  double b = 0.3;
  double a_start = 0.0;
  double a_end = 2.6;
};

struct CascadeRecord {
  ParameterPath path;
  MapOrbit initial_orbit;                  // at path.a_start
  std::vector<double> doubling_params;     // t^1 < t^2 < ...
  std::vector<double> sample_params;       // sample_n in (t^n, t^{n+1})
  /// orbit_families[n] = all coexisting orbits (period k, 2k, ..., 2^n k)
  /// at sample_params[n]; n = 0 is the pre-doubling window.
  std::vector<std::vector<MapOrbit>> orbit_families;
};

struct CascadeConfig {
  int max_doublings = 4;
  OrbitSolverConfig solver{};
  double param_tol = 1e-10;
  double scan_step = 5e-3;
  double pickup_offset = 1e-4;   // eigenvector displacement for 2k pickup
};

/// Detect successive period doublings along the path and assemble the
/// cascade record, including coexisting orbit families at mid-window
/// sample parameters. Stops cleanly at the first numerical failure.
CascadeRecord continue_cascade(const ParameterPath& path,
                               const MapOrbit& initial_orbit,
                               const CascadeConfig& cfg = {});

/// Braid of the given orbits under suspension with straight-line strand
/// interpolation: points sorted by projected coordinate; each transposition
/// of projected order emits a crossing signed by which strand passes in
/// front (larger complementary coordinate).
BraidWord extract_braid(const std::vector<MapOrbit>& orbits,
                        const HenonParams& p, const ProjectionConfig& cfg = {});

/// Union-of-orbits braid for stage n, extracted at sample_params[n]
/// ("union-braid convention", a substitute for train-track gluing).
BraidWord gamma_braid(const CascadeRecord& rec, int stage,
                      const ProjectionConfig& cfg = {});

/// Necessary condition that `after` is the period-doubling cable of
/// `before`: permutation(after) is a single cycle of doubled length and the
/// positional pair-collapse of permutation(after) covers permutation(before).
bool pd_cable_check(const BraidWord& before, const BraidWord& after);

}  // namespace rtc
