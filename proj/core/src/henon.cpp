#include "rtc/henon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rtc {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;  // radians

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
};

std::array<std::complex<double>, 2> eigenvalues2(const Mat2& m) {
  const double tr = m.trace(), det = m.det();
  const double disc = tr * tr - 4.0 * det;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    return {std::complex<double>((tr + s) / 2.0, 0.0),
            std::complex<double>((tr - s) / 2.0, 0.0)};
  }
  const double s = std::sqrt(-disc);
  return {std::complex<double>(tr / 2.0, s / 2.0),
          std::complex<double>(tr / 2.0, -s / 2.0)};
}

// f^k(z) and the monodromy J(f^{k-1} z) ... J(z).
std::pair<Point, Mat2> iterate_with_jacobian(const HenonParams& p, Point z, int k) {
  Mat2 m;
  for (int i = 0; i < k; ++i) {
    const auto j = henon_jacobian(p, z);
    m = Mat2{j[0], j[1], j[2], j[3]} * m;
    z = henon_step(p, z);
  }
  return {z, m};
}

double norm_inf(Point z) { return std::max(std::abs(z.x), std::abs(z.y)); }

}  // namespace

Point henon_step(const HenonParams& p, Point z) {
  return {p.a - z.x * z.x - p.b * z.y, z.x};
}

std::array<double, 4> henon_jacobian(const HenonParams& p, Point z) {
  return {-2.0 * z.x, -p.b, 1.0, 0.0};
}

MapOrbit find_periodic_orbit(const HenonParams& p, int period, Point seed,
                             const OrbitSolverConfig& cfg) {
  if (period < 1) throw InputError("find_periodic_orbit: period must be >= 1");
  if (p.b <= 0.0) throw InputError("find_periodic_orbit: b must be > 0");
  Point z = seed;
  bool converged = false;
  for (int it = 0; it < cfg.max_newton_iterations; ++it) {
    auto [fz, m] = iterate_with_jacobian(p, z, period);
    const Point res{fz.x - z.x, fz.y - z.y};
    if (norm_inf(res) < cfg.tolerance) {
      converged = true;
      break;
    }
    // Solve (M - I) dz = -res.
    const double a = m.a - 1.0, b = m.b, c = m.c, d = m.d - 1.0;
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-300 || !std::isfinite(det))
      throw NumericalError("find_periodic_orbit: singular Newton system");
    const double dx = (-res.x * d + res.y * b) / det;
    const double dy = (res.x * c - res.y * a) / det;
    z.x += dx;
    z.y += dy;
    if (!std::isfinite(z.x) || !std::isfinite(z.y) || norm_inf(z) > 1e8)
      throw NumericalError("find_periodic_orbit: Newton diverged");
  }
  if (!converged) throw NumericalError("find_periodic_orbit: Newton did not converge");

  MapOrbit orbit;
  orbit.period = period;
  orbit.points.resize(period);
  orbit.points[0] = z;
  for (int i = 1; i < period; ++i)
    orbit.points[i] = henon_step(p, orbit.points[i - 1]);
  const Point wrap = henon_step(p, orbit.points[period - 1]);
  orbit.residual = std::max(std::abs(wrap.x - z.x), std::abs(wrap.y - z.y));

  // Minimal period: no proper divisor may close the orbit.
  for (int d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    double r = 0.0;
    for (int i = 0; i < period; ++i) {
      const Point& q = orbit.points[(i + d) % period];
      r = std::max(r, std::max(std::abs(q.x - orbit.points[i].x),
                               std::abs(q.y - orbit.points[i].y)));
    }
    if (r <= 10.0 * cfg.tolerance)
      throw NumericalError("find_periodic_orbit: converged to non-minimal period " +
                           std::to_string(d));
  }

  auto [fz, m] = iterate_with_jacobian(p, z, period);
  (void)fz;
  orbit.multipliers = eigenvalues2(m);
  return orbit;
}

MapOrbit continue_orbit(const MapOrbit& orbit, double b, double from_a,
                        double to_a, const OrbitSolverConfig& cfg, double max_step) {
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(to_a - from_a) / max_step)));
  MapOrbit cur = orbit;
  for (int s = 1; s <= steps; ++s) {
    const double a = from_a + (to_a - from_a) * s / steps;
    cur = find_periodic_orbit({a, b}, cur.period, cur.points[0], cfg);
  }
  return cur;
}

namespace {

// 1 + tr(M) + det(M): zero exactly when a Floquet multiplier sits at -1.
double doubling_indicator(const HenonParams& p, const MapOrbit& orbit) {
  auto [fz, m] = iterate_with_jacobian(p, orbit.points[0], orbit.period);
  (void)fz;
  return 1.0 + m.trace() + m.det();
}

}  // namespace

double detect_period_doubling(const HenonParams& p0, const HenonParams& p1,
                              const MapOrbit& orbit, double param_tol,
                              const OrbitSolverConfig& cfg) {
  if (p0.b != p1.b)
    throw InputError("detect_period_doubling: bracket must share b");
  double lo = p0.a, hi = p1.a;
  if (lo > hi) std::swap(lo, hi);
  MapOrbit orbit_lo = continue_orbit(orbit, p0.b, p0.a, lo, cfg);
  const double h_lo0 = doubling_indicator({lo, p0.b}, orbit_lo);
  MapOrbit orbit_hi = continue_orbit(orbit_lo, p0.b, lo, hi, cfg);
  const double h_hi0 = doubling_indicator({hi, p0.b}, orbit_hi);
  if (h_lo0 == 0.0) return lo;
  if (h_hi0 == 0.0) return hi;
  if (h_lo0 * h_hi0 > 0.0)
    throw NumericalError("detect_period_doubling: no multiplier crossing in bracket");
  double h_lo = h_lo0;
  while (hi - lo > param_tol) {
    const double mid = 0.5 * (lo + hi);
    MapOrbit orbit_mid = continue_orbit(orbit_lo, p0.b, lo, mid, cfg);
    const double h_mid = doubling_indicator({mid, p0.b}, orbit_mid);
    if (h_mid == 0.0) return mid;
    if (h_lo * h_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      orbit_lo = std::move(orbit_mid);
      h_lo = h_mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Displace along the eigenvector of the multiplier nearest -1 and solve for
// the doubled orbit just past the bifurcation.
MapOrbit pickup_doubled_orbit(const MapOrbit& parent, double b, double a,
                              const OrbitSolverConfig& cfg) {
  auto [fz, m] = iterate_with_jacobian({a, b}, parent.points[0], parent.period);
  (void)fz;
  // Eigenvector of the 2x2 monodromy for the real eigenvalue nearest -1.
  const auto eig = eigenvalues2(m);
  double lambda = eig[0].imag() == 0.0 &&
                          std::abs(eig[0].real() + 1.0) < std::abs(eig[1].real() + 1.0)
                      ? eig[0].real()
                      : eig[1].real();
  double vx, vy;
  if (std::abs(m.b) > 1e-14) {
    vx = m.b;
    vy = lambda - m.a;
  } else {
    vx = lambda - m.d;
    vy = m.c;
  }
  const double norm = std::hypot(vx, vy);
  if (norm < 1e-14) { vx = 1.0; vy = 0.0; }
  else { vx /= norm; vy /= norm; }

  // The doubled orbit sits ~sqrt(a - a_*) from the parent, so try a ladder of
  // displacement magnitudes up to O(1e-1) in both eigenvector directions.
  for (double delta : {1e-4, -1e-4, 1e-3, -1e-3, 1e-2, -1e-2,
                       3e-2, -3e-2, 1e-1, -1e-1}) {
    Point seed{parent.points[0].x + delta * vx, parent.points[0].y + delta * vy};
    try {
      MapOrbit doubled = find_periodic_orbit({a, b}, 2 * parent.period, seed, cfg);
      // Near the bifurcation Newton can stall on a near-degenerate root glued
      // to the parent; demand real separation from the half-period translate.
      double sep = 0.0;
      for (int i = 0; i < parent.period; ++i) {
        const Point& u = doubled.points[i];
        const Point& v = doubled.points[i + parent.period];
        sep = std::max(sep, std::hypot(u.x - v.x, u.y - v.y));
      }
      if (sep > 1e-6) return doubled;
    } catch (const NumericalError&) {
      // try the next displacement
    }
  }
  throw NumericalError("pickup_doubled_orbit: no doubled orbit found");
}

}  // namespace

CascadeRecord continue_cascade(const ParameterPath& path,
                               const MapOrbit& initial_orbit,
                               const CascadeConfig& cfg) {
  CascadeRecord rec;
  rec.path = path;
  rec.initial_orbit = initial_orbit;

  struct Held {
    MapOrbit orbit;
    double at;
  };
  std::vector<Held> held;  // every orbit of the family, at its last good param
  held.push_back({initial_orbit, path.a_start});

  MapOrbit cur = initial_orbit;
  double a_cur = path.a_start;
  double step = cfg.scan_step;

  try {
    for (int n = 0; n < cfg.max_doublings; ++n) {
      double h_prev = doubling_indicator({a_cur, path.b}, cur);
      double a_prev = a_cur;
      bool found = false;
      while (a_cur < path.a_end) {
        const double a_next = std::min(a_cur + step, path.a_end);
        cur = continue_orbit(cur, path.b, a_cur, a_next, cfg.solver);
        const double h = doubling_indicator({a_next, path.b}, cur);
        if (h_prev > 0.0 && h <= 0.0) {
          const double t = detect_period_doubling(
              {a_prev, path.b}, {a_next, path.b},
              continue_orbit(cur, path.b, a_next, a_prev, cfg.solver),
              cfg.param_tol, cfg.solver);
          rec.doubling_params.push_back(t);
          found = true;
          a_cur = a_next;
          break;
        }
        h_prev = h;
        a_prev = a_cur = a_next;
      }
      if (!found) break;

      const double t = rec.doubling_params.back();
      const double prev_t = rec.doubling_params.size() >= 2
                                ? rec.doubling_params[rec.doubling_params.size() - 2]
                                : path.a_start;
      const double gap = t - prev_t;
      const double a_pick = std::min(t + std::clamp(gap / 100.0, 1e-5, 1e-3), path.a_end);
      MapOrbit parent_at_pick = continue_orbit(cur, path.b, a_cur, a_pick, cfg.solver);
      MapOrbit doubled = pickup_doubled_orbit(parent_at_pick, path.b, a_pick, cfg.solver);

      held.back() = {parent_at_pick, a_pick};
      held.push_back({doubled, a_pick});
      cur = doubled;
      a_cur = a_pick;
      step = std::clamp(gap / 50.0, 1e-7, cfg.scan_step);
    }
  } catch (const NumericalError&) {
    // Keep the stages already found; the record stays clean.
  }

  // Mid-window samples and coexisting orbit families.
  const int d = static_cast<int>(rec.doubling_params.size());
  for (int n = 0; n <= d; ++n) {
    const double lo = n == 0 ? path.a_start : rec.doubling_params[n - 1];
    double hi;
    if (n < d) {
      hi = rec.doubling_params[n];
    } else if (d >= 2) {
      hi = std::min(lo + (rec.doubling_params[d - 1] - rec.doubling_params[d - 2]) / 8.0,
                    path.a_end);
    } else {
      hi = std::min(lo + 0.01, path.a_end);
    }
    const double sample = n == 0 ? lo + 0.5 * (hi - lo) : lo + 0.1 * (hi - lo);
    rec.sample_params.push_back(sample);
    std::vector<MapOrbit> family;
    try {
      for (int j = 0; j <= n && j < static_cast<int>(held.size()); ++j)
        family.push_back(continue_orbit(held[j].orbit, path.b, held[j].at, sample,
                                        cfg.solver));
    } catch (const NumericalError&) {
      family.clear();  // orbit lost at the sample parameter; family marked empty
    }
    rec.orbit_families.push_back(std::move(family));
  }
  return rec;
}

namespace {

struct Strand {
  double u0, u1;  // projected coordinate at t = 0 and t = 1
  double z0, z1;  // complementary coordinate
};

struct Crossing {
  double time;
  int i, j;  // point indices
};

}  // namespace

BraidWord extract_braid(const std::vector<MapOrbit>& orbits,
                        const HenonParams& p, const ProjectionConfig& cfg) {
  if (cfg.steps < 2) throw InputError("extract_braid: steps must be >= 2");
  std::vector<Point> pts;
  std::vector<int> image;  // image[i] = index of f(pts[i])
  for (const MapOrbit& o : orbits) {
    const int base = static_cast<int>(pts.size());
    for (int i = 0; i < o.period; ++i) {
      pts.push_back(o.points[i]);
      image.push_back(base + (i + 1) % o.period);
    }
  }
  const int n = static_cast<int>(pts.size());
  if (n == 0) throw InputError("extract_braid: no orbits supplied");
  if (n == 1) return BraidWord(1);

  for (int retry = 0; retry <= cfg.max_angle_retries; ++retry) {
    const double theta = cfg.angle + retry * kGoldenAngle;
    const double ct = std::cos(theta), st = std::sin(theta);
    auto proj = [&](Point q) { return q.x * ct + q.y * st; };
    auto comp = [&](Point q) { return -q.x * st + q.y * ct; };

    std::vector<Strand> s(n);
    for (int i = 0; i < n; ++i) {
      s[i] = {proj(pts[i]), proj(pts[image[i]]), comp(pts[i]), comp(pts[image[i]])};
    }

    bool coincident = false;
    for (int i = 0; i < n && !coincident; ++i)
      for (int j = i + 1; j < n && !coincident; ++j)
        if (std::abs(s[i].u0 - s[j].u0) < cfg.tolerance ||
            std::abs(s[i].u1 - s[j].u1) < cfg.tolerance)
          coincident = true;
    if (coincident) continue;

    // Motion is linear, so each pair crosses at most once and the crossing
    // time is exact: the endpoint differences d0, d1 have opposite signs
    // (the coincidence pre-check above rules out |d0| or |d1| below tol).
    auto z_at = [&](int i, double t) { return (1.0 - t) * s[i].z0 + t * s[i].z1; };

    std::vector<Crossing> events;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double d0 = s[a].u0 - s[b].u0;
        const double d1 = s[a].u1 - s[b].u1;
        if (d0 * d1 < 0.0) events.push_back({d0 / (d0 - d1), a, b});
      }
    std::sort(events.begin(), events.end(),
              [](const Crossing& x, const Crossing& y) { return x.time < y.time; });

    std::vector<int> order(n);  // order[pos] = point index
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return s[i].u0 < s[j].u0; });
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;

    std::vector<Letter> letters;
    bool failed = false;
    for (const Crossing& ev : events) {
      const int pi = pos[ev.i], pj = pos[ev.j];
      if (std::abs(pi - pj) != 1) {
        failed = true;  // simultaneous triple crossing; re-project
        break;
      }
      const int left = pi < pj ? ev.i : ev.j;
      const int right = pi < pj ? ev.j : ev.i;
      const double dz = z_at(left, ev.time) - z_at(right, ev.time);
      int sign;
      if (std::abs(dz) >= cfg.tolerance) {
        sign = dz > 0.0 ? 1 : -1;
      } else {
        // Endpoint-swapping strands meet at their common midpoint for every
        // projection angle, so a retry cannot help. Resolve the tie by a
        // fixed convention: the strand moving rightward passes behind.
        const double vl = s[left].u1 - s[left].u0;
        const double vr = s[right].u1 - s[right].u0;
        sign = vl > vr ? -1 : 1;
      }
      letters.push_back({std::min(pi, pj) + 1, sign});
      std::swap(order[std::min(pi, pj)], order[std::max(pi, pj)]);
      pos[ev.i] = pj;
      pos[ev.j] = pi;
    }
    if (failed) continue;

    BraidWord braid(n, std::move(letters));
    // The braid permutation must equal the dynamical permutation of the
    // sorted points; anything else is a bug in the crossing bookkeeping.
    std::vector<int> end_order(n);
    std::iota(end_order.begin(), end_order.end(), 0);
    std::sort(end_order.begin(), end_order.end(),
              [&](int i, int j) { return s[i].u1 < s[j].u1; });
    std::vector<int> end_pos(n);
    for (int k = 0; k < n; ++k) end_pos[end_order[k]] = k;
    Permutation got = permutation(braid);
    std::vector<int> expected(n);
    std::vector<int> start_pos(n);
    {
      std::vector<int> start_order(n);
      std::iota(start_order.begin(), start_order.end(), 0);
      std::sort(start_order.begin(), start_order.end(),
                [&](int i, int j) { return s[i].u0 < s[j].u0; });
      for (int k = 0; k < n; ++k) start_pos[start_order[k]] = k;
    }
    for (int i = 0; i < n; ++i) expected[start_pos[i]] = end_pos[i] + 1;
    if (!(got == Permutation(expected)))
      throw ConsistencyError("extract_braid: braid permutation mismatch");
    return braid;
  }
  throw NumericalError("extract_braid: unresolvable projection coincidence");
}

BraidWord gamma_braid(const CascadeRecord& rec, int stage,
                      const ProjectionConfig& cfg) {
  if (stage < 0 || stage >= static_cast<int>(rec.orbit_families.size()))
    throw InputError("gamma_braid: stage out of range");
  const auto& family = rec.orbit_families[stage];
  if (family.empty() || static_cast<int>(family.size()) != stage + 1)
    throw NumericalError("gamma_braid: orbit family incomplete at sample parameter");
  return extract_braid(family, {rec.sample_params[stage], rec.path.b}, cfg);
}

bool pd_cable_check(const BraidWord& before, const BraidWord& after) {
  if (after.strands() != 2 * before.strands())
    throw InputError("pd_cable_check: after must have twice the strands of before");
  const Permutation pa = permutation(after);
  if (!pa.is_single_cycle() || pa.size() != 2 * before.strands()) return false;
  const Permutation pb = permutation(before);
  // Positional pair collapse: pair j = strands {2j-1, 2j}.
  for (int j = 1; j <= before.strands(); ++j) {
    const int m = pb.image(j);
    for (int strand : {2 * j - 1, 2 * j}) {
      const int img = pa.image(strand);
      if (img != 2 * m - 1 && img != 2 * m) return false;
    }
  }
  return true;
}

}  // namespace rtc
