#include "aa/phases.hpp"

#include <cmath>

namespace aa {

namespace {

constexpr double kCyclicTol = 1e-9;
constexpr double kClosureTol = 1e-6;

cxd expectation(const StateVector& psi, const Operator& h) {
  cxd s = 0.0;
  for (int i = 0; i < psi.dim; ++i)
    for (int j = 0; j < psi.dim; ++j)
      s += std::conj(psi.a[static_cast<size_t>(i)]) * h.at(i, j) * psi.a[static_cast<size_t>(j)];
  return s;
}

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(cross(a, b).norm(), dot(a, b));
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Signed spherical excess of the triangle (a, b, c), Oosterom-Strackee form.
// Degenerate triangles give an excess at roundoff scale instead of the
// sqrt-amplified noise of the side-length formulas.
double signed_excess(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = triple(a, b, c);
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

double wrap_pi(double angle) {
  double w = std::remainder(angle, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  if (w > kPi) w -= 2.0 * kPi;
  return w;
}

double wrap_two_pi(double angle) {
  double w = std::remainder(angle, 4.0 * kPi);
  if (w <= -2.0 * kPi) w += 4.0 * kPi;
  if (w > 2.0 * kPi) w -= 4.0 * kPi;
  return w;
}

double phase_distance(double a, double b) { return std::abs(wrap_pi(a - b)); }

double total_phase(const StateVector& psi0, const StateVector& psiT) {
  const cxd overlap = inner(psi0, psiT);
  if (std::abs(overlap) < 1.0 - kCyclicTol)
    fail(ErrorKind::NotCyclic, "final state is not the initial state up to a phase");
  return wrap_pi(std::arg(overlap));
}

DynamicPhase dynamic_phase(const Trajectory& traj, const Schedule& s) {
  if (traj.segment_first.size() != s.segments.size() || traj.dim != s.dim)
    fail(ErrorKind::MismatchedTrajectory, "trajectory was not produced from this schedule");
  const int k = traj.samples_per_segment;
  // Segment boundaries must sit at the schedule's cumulative durations.
  double elapsed = 0.0;
  for (size_t iseg = 0; iseg < s.segments.size(); ++iseg) {
    elapsed += s.segments[iseg].duration;
    const size_t last = static_cast<size_t>(traj.segment_first[iseg] + k - 1);
    if (last >= traj.times.size() ||
        std::abs(traj.times[last] - elapsed) > 1e-9 * std::max(1.0, elapsed))
      fail(ErrorKind::MismatchedTrajectory, "trajectory timing does not match the schedule");
  }

  DynamicPhase out;
  for (size_t iseg = 0; iseg < s.segments.size(); ++iseg) {
    const Segment& seg = s.segments[iseg];
    const int first = traj.segment_first[iseg];  // first new sample of the segment
    const int start = first - 1;                 // segment's starting state
    double integral = 0.0;
    if (seg.impulse) {
      // Hard-pulse limit: H dt -> (angle/2)(axis.s) df along the arc.
      const Operator gen = pauli_compose(
          {0.0, 0.5 * seg.angle * seg.axis.x, 0.5 * seg.angle * seg.axis.y,
           0.5 * seg.angle * seg.axis.z});
      const Operator gen_full =
          s.dim == 4 ? kron(gen, Operator::identity(2)) : gen;
      const double h = 1.0 / k;
      for (int i = 0; i < k; ++i) {
        const double e0 = expectation(traj.states[static_cast<size_t>(start + i)], gen_full).real();
        const double e1 =
            expectation(traj.states[static_cast<size_t>(start + i + 1)], gen_full).real();
        integral += 0.5 * (e0 + e1) * h;
      }
    } else {
      if (seg.duration == 0.0) continue;
      const double h = seg.duration / k;
      for (int i = 0; i < k; ++i) {
        const double e0 = expectation(traj.states[static_cast<size_t>(start + i)], seg.h).real();
        const double e1 = expectation(traj.states[static_cast<size_t>(start + i + 1)], seg.h).real();
        integral += 0.5 * (e0 + e1) * h;
      }
    }
    if (seg.label == SegmentLabel::free_evolution)
      out.free_part -= integral;
    else
      out.pulse_part -= integral;
  }
  return out;
}

PhaseReport aa_phase(const Trajectory& traj, const Schedule& s) {
  if (traj.dim != 2) fail(ErrorKind::DimensionMismatch, "aa_phase works on single-qubit loops");
  const StateVector& psi0 = traj.states.front();
  const StateVector& psiT = traj.states.back();
  const double defect = 1.0 - std::abs(inner(psi0, psiT));
  if (defect > kCyclicTol) fail(ErrorKind::NotCyclic, "trajectory endpoint is not cyclic");

  PhaseReport report;
  report.cyclicity_defect = defect;
  report.total = total_phase(psi0, psiT);
  const DynamicPhase dyn = dynamic_phase(traj, s);
  report.dynamic_free = dyn.free_part;
  report.dynamic_pulse = dyn.pulse_part;
  report.geometric = wrap_pi(report.total - dyn.free_part - dyn.pulse_part);
  report.solid_angle = solid_angle(traj.bloch_a);
  report.accounting =
      s.frame == Frame::control ? Accounting::control_frame : Accounting::physical;
  return report;
}

double solid_angle(const std::vector<Vec3>& closed_path) {
  const size_t n = closed_path.size();
  if (n < 3) fail(ErrorKind::OpenPath, "path needs at least three points");

  std::vector<Vec3> p;
  p.reserve(n);
  for (const Vec3& v : closed_path) {
    if (std::abs(v.norm() - 1.0) > 1e-6)
      fail(ErrorKind::InvalidParams, "path points must be unit vectors");
    p.push_back(v.normalized());
  }
  if (angle_between(p.front(), p.back()) > kClosureTol)
    fail(ErrorKind::OpenPath, "first and last path points do not coincide");

  Vec3 mean{};
  Vec3 area_vec{};
  for (size_t i = 0; i + 1 < n; ++i) {
    const double step = angle_between(p[i], p[i + 1]);
    if (step >= 0.5 * kPi) fail(ErrorKind::DegenerateStep, "consecutive path points too far apart");
    mean = mean + p[i];
    area_vec = area_vec + cross(p[i], p[i + 1]);
  }

  // Fan apex: any direction clear of the path and of its antipodes yields
  // the enclosed area mod 4pi. Candidates are the mean direction, then the
  // loop's area vector (either orientation); a fully degenerate loop falls
  // back to the first point, where the pairwise cancellation of the
  // retraced triangles is exact at roundoff scale.
  const auto clearance = [&p, n](const Vec3& apex) {
    double margin = 0.5 * kPi;
    for (size_t i = 0; i < n; ++i) {
      const double ang = angle_between(apex, p[i]);
      margin = std::min(margin, std::min(ang, kPi - ang));
    }
    return margin;
  };
  Vec3 apex = p.front();
  bool have_apex = false;
  if (mean.norm() >= 1e-6 * static_cast<double>(n)) {
    const Vec3 cand = mean.normalized();
    if (clearance(cand) >= 1e-3) {
      apex = cand;
      have_apex = true;
    }
  }
  if (!have_apex && area_vec.norm() >= 1e-9 * static_cast<double>(n)) {
    const Vec3 v = area_vec.normalized();
    for (const Vec3& cand : {v, Vec3{-v.x, -v.y, -v.z}}) {
      if (clearance(cand) >= 1e-3) {
        apex = cand;
        break;
      }
    }
  }

  double omega = 0.0;
  for (size_t i = 0; i + 1 < n; ++i) omega += signed_excess(apex, p[i], p[i + 1]);
  omega = std::abs(omega) <= 2.0 * kPi ? omega : wrap_two_pi(omega);

  // Hemisphere loops sit on the wrap boundary where the representative's
  // sign is a convention; take it from the loop orientation (the dominant
  // area-vector component), which flips with the traversal direction.
  if (std::abs(std::abs(omega) - 2.0 * kPi) <= 1e-6 &&
      area_vec.norm() >= 1e-9 * static_cast<double>(n)) {
    double dominant = area_vec.z;
    if (std::abs(area_vec.y) > std::abs(dominant)) dominant = area_vec.y;
    if (std::abs(area_vec.x) > std::abs(dominant)) dominant = area_vec.x;
    omega = std::copysign(2.0 * kPi, dominant);
  }
  return omega;
}

}  // namespace aa
