// Copyright 2026 The robustctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustctl/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace robustctl {

PulseSchedule::PulseSchedule(std::size_t dim, double u_max, std::vector<ControlSegment> segments)
    : dim_(dim), u_max_(u_max), segments_(std::move(segments)) {
  if (dim_ == 0) {
    throw ValidationError("PulseSchedule: dimension must be positive");
  }
  if (!(u_max_ > 0.0) || !std::isfinite(u_max_)) {
    throw ValidationError("PulseSchedule: u_max must be positive and finite");
  }
  if (segments_.empty()) {
    throw ValidationError("PulseSchedule: at least one segment is required");
  }
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const auto &seg = segments_[k];
    require_same_dim(dim_, seg.generator.dim(), "PulseSchedule segment");
    if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
      throw ValidationError("PulseSchedule: segment " + std::to_string(k) + " has non-positive duration");
    }
    const double amp = op_norm(seg.generator);
    if (amp > u_max_ * (1.0 + 1e-12) + 1e-12) {
      throw ValidationError("PulseSchedule: segment " + std::to_string(k) + " exceeds amplitude cap (" +
                            std::to_string(amp) + " > " + std::to_string(u_max_) + ")");
    }
  }
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto &seg : segments_) {
    t += seg.duration;
  }
  return t;
}

PulseSchedule concatenate(const PulseSchedule &s1, const PulseSchedule &s2) {
  require_same_dim(s1.dim(), s2.dim(), "concatenate");
  std::vector<ControlSegment> segs = s1.segments();
  segs.insert(segs.end(), s2.segments().begin(), s2.segments().end());
  return PulseSchedule(s1.dim(), std::max(s1.u_max(), s2.u_max()), std::move(segs));
}

NoiseSpace::NoiseSpace(OperatorBasis basis) : basis_(std::move(basis)) {
  if (basis_.empty()) {
    throw ValidationError("NoiseSpace: basis must be non-empty");
  }
}

NoiseSpace NoiseSpace::span(std::size_t dim, const std::vector<HermitianOp> &ops, const Tolerances &tol) {
  for (const auto &op : ops) {
    require_same_dim(dim, op.dim(), "NoiseSpace::span");
    if (!op.is_traceless(tol)) {
      throw ValidationError("NoiseSpace: noise operators must be traceless");
    }
  }
  return NoiseSpace(OperatorBasis::orthonormalize(dim, ops, tol));
}

NoiseSpace NoiseSpace::from_paulis(const std::vector<std::string> &labels) {
  if (labels.empty()) {
    throw ValidationError("NoiseSpace: empty Pauli list");
  }
  std::vector<HermitianOp> ops;
  for (const auto &l : labels) {
    ops.push_back(pauli_string(l));
  }
  return span(ops.front().dim(), ops);
}

NoiseSpace NoiseSpace::full_su(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > 6) {
    throw ValidationError("NoiseSpace::full_su: qubit count must be in 1..6");
  }
  std::vector<std::string> labels;
  const std::size_t total = std::size_t{1} << (2 * n_qubits);
  for (std::size_t code = 1; code < total; ++code) {
    std::string label(n_qubits, 'I');
    for (std::size_t q = 0; q < n_qubits; ++q) {
      label[q] = "IXYZ"[(code >> (2 * (n_qubits - 1 - q))) & 3];
    }
    labels.push_back(label);
  }
  return from_paulis(labels);
}

namespace {

// e^{iHt} V e^{-iHt} integrated over [0, tau] for constant H, given H's
// spectrum. Matrix elements in the eigenbasis are V_jl e^{i(l_j - l_l)t}.
Matrix segment_integral(const Spectrum &sp, const Matrix &v, double tau, double gap_tol) {
  const Matrix vt = sp.vectors.adjoint() * v * sp.vectors;
  const Eigen::Index d = vt.rows();
  Matrix f(d, d);
  const Complex i(0.0, 1.0);
  for (Eigen::Index l = 0; l < d; ++l) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double delta = sp.values(j) - sp.values(l);
      Complex g;
      if (std::abs(delta) * tau < gap_tol) {
        g = tau * (1.0 + 0.5 * i * delta * tau);
      } else {
        g = (std::exp(i * (delta * tau)) - 1.0) / (i * delta);
      }
      f(j, l) = vt(j, l) * g;
    }
  }
  return sp.vectors * f * sp.vectors.adjoint();
}

Matrix phase_exp(const Spectrum &sp, double t) {
  const Eigen::Index d = sp.values.size();
  Vector ph(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    ph(k) = std::polar(1.0, -sp.values(k) * t);
  }
  return sp.vectors * ph.asDiagonal() * sp.vectors.adjoint();
}

// Per-segment spectra plus the propagator and accumulated error at each
// segment start, so partial integrals at arbitrary t cost one segment.
class Evaluator {
 public:
  Evaluator(const PulseSchedule &s, const Matrix &v, double gap_tol) : v_(v), gap_tol_(gap_tol) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    Matrix u = Matrix::Identity(d, d);
    Matrix e = Matrix::Zero(d, d);
    double t0 = 0.0;
    for (const auto &seg : s.segments()) {
      Frame fr;
      fr.sp = spectrum(seg.generator);
      fr.start = t0;
      fr.duration = seg.duration;
      fr.u_start = u;
      fr.e_start = e;
      e += u.adjoint() * segment_integral(fr.sp, v_, seg.duration, gap_tol_) * u;
      u = phase_exp(fr.sp, seg.duration) * u;
      t0 += seg.duration;
      frames_.push_back(std::move(fr));
    }
    total_ = e;
    u_final_ = u;
    t_end_ = t0;
  }

  const Matrix &total_error() const { return total_; }
  const Matrix &final_propagator() const { return u_final_; }
  double end_time() const { return t_end_; }

  Matrix error_until(double t) const {
    if (t >= t_end_) {
      return total_;
    }
    const Frame &fr = locate(t);
    const double tau = std::clamp(t - fr.start, 0.0, fr.duration);
    return fr.e_start + fr.u_start.adjoint() * segment_integral(fr.sp, v_, tau, gap_tol_) * fr.u_start;
  }

  Matrix propagator_until(double t) const {
    if (t >= t_end_) {
      return u_final_;
    }
    const Frame &fr = locate(t);
    const double tau = std::clamp(t - fr.start, 0.0, fr.duration);
    return phase_exp(fr.sp, tau) * fr.u_start;
  }

 private:
  struct Frame {
    Spectrum sp;
    double start = 0.0;
    double duration = 0.0;
    Matrix u_start;
    Matrix e_start;
  };

  const Frame &locate(double t) const {
    auto it = std::upper_bound(frames_.begin(), frames_.end(), t,
                               [](double x, const Frame &f) { return x < f.start; });
    if (it == frames_.begin()) {
      return frames_.front();
    }
    return *std::prev(it);
  }

  Matrix v_;
  double gap_tol_;
  std::vector<Frame> frames_;
  Matrix total_;
  Matrix u_final_;
  double t_end_ = 0.0;
};

void require_state(const Vector &psi, std::size_t dim, const Tolerances &tol) {
  require_same_dim(dim, static_cast<std::size_t>(psi.size()), "state");
  if (std::abs(psi.norm() - 1.0) > tol.state_norm) {
    throw ValidationError("state vector is not normalized");
  }
}

}  // namespace

UnitaryOp propagator(const PulseSchedule &s) {
  UnitaryOp u = UnitaryOp::identity(s.dim());
  for (const auto &seg : s.segments()) {
    u = mat_exp(seg.generator, seg.duration) * u;
  }
  return u;
}

UnitaryOp perturbed_propagator(const PulseSchedule &s, const HermitianOp &v, double delta) {
  require_same_dim(s.dim(), v.dim(), "perturbed_propagator");
  UnitaryOp u = UnitaryOp::identity(s.dim());
  for (const auto &seg : s.segments()) {
    u = mat_exp(seg.generator + v * delta, seg.duration) * u;
  }
  return u;
}

UnitaryOp propagator_at(const PulseSchedule &s, double t) {
  if (t < 0.0) {
    throw ValidationError("propagator_at: negative time");
  }
  UnitaryOp u = UnitaryOp::identity(s.dim());
  double t0 = 0.0;
  for (const auto &seg : s.segments()) {
    if (t <= t0 + seg.duration) {
      return mat_exp(seg.generator, std::max(0.0, t - t0)) * u;
    }
    u = mat_exp(seg.generator, seg.duration) * u;
    t0 += seg.duration;
  }
  return u;
}

HermitianOp first_order_error(const PulseSchedule &s, const HermitianOp &v, const Tolerances &tol) {
  require_same_dim(s.dim(), v.dim(), "first_order_error");
  Evaluator ev(s, v.matrix(), tol.degenerate_gap);
  return hermitian_part(ev.total_error());
}

ErrorReport error_report(const PulseSchedule &s, const NoiseSpace &noise, const Tolerances &tol) {
  require_same_dim(s.dim(), noise.dim(), "error_report");
  ErrorReport rep;
  rep.total_duration = s.total_duration();
  for (std::size_t i = 0; i < noise.size(); ++i) {
    if (!noise[i].is_traceless(tol)) {
      rep.warnings.push_back("noise element " + std::to_string(i) + " is not traceless");
    }
    rep.errors.push_back(first_order_error(s, noise[i], tol));
    rep.norms.push_back(op_norm(rep.errors.back()));
    rep.worst_norm = std::max(rep.worst_norm, rep.norms.back());
  }
  return rep;
}

std::vector<SeriesPoint> susceptibility_series(const PulseSchedule &s, const HermitianOp &v, int n_points,
                                               const Vector *psi0, const Tolerances &tol) {
  require_same_dim(s.dim(), v.dim(), "susceptibility_series");
  if (n_points < 2) {
    throw ValidationError("susceptibility_series: n_points must be >= 2");
  }
  if (psi0 != nullptr) {
    require_state(*psi0, s.dim(), tol);
  }
  Evaluator ev(s, v.matrix(), tol.degenerate_gap);
  const double total = ev.end_time();
  std::vector<SeriesPoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    SeriesPoint p;
    p.t = k == n_points - 1 ? total : total * static_cast<double>(k) / static_cast<double>(n_points - 1);
    const HermitianOp e = hermitian_part(ev.error_until(p.t));
    p.norm = op_norm(e);
    if (psi0 != nullptr) {
      p.state_value = psi0->dot(e.matrix() * *psi0).real();
    }
    out.push_back(p);
  }
  return out;
}

double state_error(const PulseSchedule &s, const HermitianOp &v, const Vector &psi0, const Tolerances &tol) {
  require_state(psi0, s.dim(), tol);
  const HermitianOp e = first_order_error(s, v, tol);
  return psi0.dot(e.matrix() * psi0).real();
}

SpeedCertificate speed_certificate(const PulseSchedule &s, const HermitianOp &v, int n_samples) {
  require_same_dim(s.dim(), v.dim(), "speed_certificate");
  if (n_samples < 2) {
    throw ValidationError("speed_certificate: n_samples must be >= 2");
  }
  SpeedCertificate cert;
  cert.bound = 2.0 * s.u_max() * op_norm(v);
  for (const auto &seg : s.segments()) {
    cert.analytic_max = std::max(cert.analytic_max, op_norm(i_commutator(seg.generator, v)));
  }
  Evaluator ev(s, v.matrix(), Tolerances{}.degenerate_gap);
  const double total = ev.end_time();
  const double dt = total / static_cast<double>(n_samples - 1);
  Matrix prev;
  for (int k = 0; k < n_samples; ++k) {
    const double t = k == n_samples - 1 ? total : dt * static_cast<double>(k);
    const Matrix u = ev.propagator_until(t);
    Matrix y = u.adjoint() * v.matrix() * u;
    if (k > 0) {
      const double speed = op_norm(hermitian_part(y - prev)) / dt;
      cert.finite_difference_max = std::max(cert.finite_difference_max, speed);
    }
    prev = std::move(y);
  }
  return cert;
}

FeasibilityResult fixed_vector_check(const std::vector<HermitianOp> &generators, const NoiseSpace &noise,
                                     const Tolerances &tol) {
  if (generators.empty()) {
    throw ValidationError("fixed_vector_check: empty generator list");
  }
  const auto d = static_cast<Eigen::Index>(noise.dim());
  const auto n = static_cast<Eigen::Index>(noise.size());
  const Eigen::Index block = 2 * d * d;
  Eigen::MatrixXd stacked(block * static_cast<Eigen::Index>(generators.size()), n);
  double scale = 0.0;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    require_same_dim(noise.dim(), generators[g].dim(), "fixed_vector_check");
    scale = std::max(scale, op_norm(generators[g]));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Matrix &gm = generators[g].matrix();
      const Matrix &vm = noise[static_cast<std::size_t>(i)].matrix();
      const Matrix c = gm * vm - vm * gm;
      for (Eigen::Index e = 0; e < d * d; ++e) {
        stacked(static_cast<Eigen::Index>(g) * block + 2 * e, i) = c(e % d, e / d).real();
        stacked(static_cast<Eigen::Index>(g) * block + 2 * e + 1, i) = c(e % d, e / d).imag();
      }
    }
  }
  FeasibilityResult res;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  const double thresh = tol.rank * std::max(scale, 1.0);
  Eigen::Index smallest = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    // JacobiSVD returns only min(rows, cols) singular values; rows >= cols here.
    if (sv(i) <= thresh) {
      ++res.fixed_dimension;
    }
    if (sv(i) <= sv(smallest)) {
      smallest = i;
    }
  }
  res.feasible = res.fixed_dimension == 0;
  if (!res.feasible) {
    const Eigen::VectorXd c = svd.matrixV().col(smallest);
    HermitianOp a = HermitianOp::zero(noise.dim());
    for (Eigen::Index i = 0; i < n; ++i) {
      a += noise[static_cast<std::size_t>(i)] * c(i);
    }
    res.witness = a * (1.0 / std::sqrt(hs_inner(a, a)));
  }
  return res;
}

}  // namespace robustctl
