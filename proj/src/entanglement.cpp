#include "fermient/entanglement.hpp"

#include "fermient/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermient {

ModePartition::ModePartition(int n_modes, std::vector<int> side_a, std::vector<int> side_b)
    : n_modes_(n_modes), side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
  check_mode_count(n_modes);
  if (side_a_.empty() || side_b_.empty()) {
    throw Error(ErrorCode::invalid_argument, "partition sides must be non-empty");
  }
  std::vector<int> seen(static_cast<std::size_t>(n_modes), 0);
  for (const auto* side : {&side_a_, &side_b_}) {
    for (int m : *side) {
      check_mode(n_modes, m);
      if (seen[m]++) {
        throw Error(ErrorCode::invalid_argument, "mode " + std::to_string(m) + " listed twice");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::invalid_argument, "partition does not cover every mode");
  }
}

ModePartition ModePartition::from_side_a(int n_modes, std::vector<int> side_a) {
  check_mode_count(n_modes);
  std::vector<int> side_b;
  for (int m = 0; m < n_modes; ++m) {
    if (std::find(side_a.begin(), side_a.end(), m) == side_a.end()) side_b.push_back(m);
  }
  return ModePartition(n_modes, std::move(side_a), std::move(side_b));
}

double concurrence_even(const FockState& s) {
  if (s.n_modes() != 4) throw Error(ErrorCode::wrong_shape, "concurrence needs four modes");
  if (s.parity() != Parity::even) throw Error(ErrorCode::wrong_parity, "expected even parity");
  const Complex q = s[3] * s[12] - s[5] * s[10] + s[9] * s[6] - s[0] * s[15];
  return 2.0 * std::abs(q);
}

double concurrence_odd(const FockState& s) {
  if (s.n_modes() != 4) throw Error(ErrorCode::wrong_shape, "concurrence needs four modes");
  if (s.parity() != Parity::odd) throw Error(ErrorCode::wrong_parity, "expected odd parity");
  Complex q = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Mask one = Mask{1} << i;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    q += s[one] * sign * s[15 ^ one];
  }
  return 2.0 * std::abs(q);
}

double concurrence(const FockState& s) {
  return s.parity() == Parity::even ? concurrence_even(s) : concurrence_odd(s);
}

double f_plus(double c) { return 0.5 * (1.0 + std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)))); }
double f_minus(double c) { return 0.5 * (1.0 - std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)))); }

FockVector reorder_modes(const FockVector& v, const std::vector<int>& order) {
  const int n = v.n_modes();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::dimension_mismatch, "mode order has the wrong length");
  }
  Vector out = Vector::Zero(static_cast<Eigen::Index>(v.dim()));
  for (Mask m = 0; m < v.dim(); ++m) {
    if (v[m] == Complex{}) continue;
    Mask target = 0;
    int inversions = 0;
    for (int t = 0; t < n; ++t) {
      if (!(m & (Mask{1} << order[t]))) continue;
      target |= Mask{1} << t;
      for (int u = t + 1; u < n; ++u) {
        if ((m & (Mask{1} << order[u])) && order[u] < order[t]) ++inversions;
      }
    }
    out[target] = (inversions % 2 == 0 ? 1.0 : -1.0) * v[m];
  }
  return FockVector(n, std::move(out));
}

ReducedDensity reduced_state(const FockState& state, const ModePartition& part, Side side) {
  if (part.n_modes() != state.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "partition and state mode counts differ");
  }
  const auto& keep = side == Side::A ? part.side_a() : part.side_b();
  const auto& rest = side == Side::A ? part.side_b() : part.side_a();
  std::vector<int> order(keep);
  order.insert(order.end(), rest.begin(), rest.end());
  const FockVector r = reorder_modes(state, order);

  const Eigen::Index dk = Eigen::Index{1} << keep.size();
  const Eigen::Index dr = Eigen::Index{1} << rest.size();
  Matrix m(dk, dr);
  for (Eigen::Index b = 0; b < dr; ++b) {
    for (Eigen::Index a = 0; a < dk; ++a) m(a, b) = r[static_cast<Mask>(a | (b << keep.size()))];
  }
  Matrix rho = m * m.adjoint();
  return ReducedDensity{keep, (rho + rho.adjoint()) / 2.0};
}

Eigen::VectorXd reduced_spectrum(const ReducedDensity& rho) {
  return hermitian_eigensystem(rho.matrix).eigenvalues;
}

double bipartite_entropy(const FockState& state, const ModePartition& part,
                         const EntropyFunction& f) {
  const double sa = trace_entropy(reduced_spectrum(reduced_state(state, part, Side::A)), f);
  const double sb = trace_entropy(reduced_spectrum(reduced_state(state, part, Side::B)), f);
  if (std::abs(sa - sb) > tol::compare) {
    throw Error(ErrorCode::side_mismatch,
                "S_A = " + std::to_string(sa) + " but S_B = " + std::to_string(sb));
  }
  return sa;
}

namespace {

double det2(const Matrix& m) { return std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)); }

}  // namespace

LocalParitySplit local_parity_split(const FockState& state, const ModePartition& part) {
  if (state.n_modes() != 4 || part.n_modes() != 4 || part.side_a().size() != 2) {
    throw Error(ErrorCode::wrong_shape, "local parity split needs a 2+2 split of four modes");
  }
  if (state.parity() != Parity::even) {
    throw Error(ErrorCode::wrong_parity, "local parity split needs even global parity");
  }
  std::vector<int> order(part.side_a());
  order.insert(order.end(), part.side_b().begin(), part.side_b().end());
  const FockVector r = reorder_modes(state, order);

  LocalParitySplit out;
  out.beta = Matrix(2, 2);
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) out.beta(mu, nu) = r[(Mask{1} << mu) | (Mask{1} << (nu + 2))];
  }
  out.beta_tilde = Matrix(2, 2);
  out.beta_tilde << r[0], r[12], r[3], r[15];

  out.p_minus = out.beta.squaredNorm();
  out.p_plus = out.beta_tilde.squaredNorm();
  const Complex db = out.beta(0, 0) * out.beta(1, 1) - out.beta(0, 1) * out.beta(1, 0);
  const Complex dbt = out.beta_tilde(0, 0) * out.beta_tilde(1, 1) -
                      out.beta_tilde(0, 1) * out.beta_tilde(1, 0);
  out.c_minus = out.p_minus > tol::zero ? 2.0 * det2(out.beta) / out.p_minus : 0.0;
  out.c_plus = out.p_plus > tol::zero ? 2.0 * det2(out.beta_tilde) / out.p_plus : 0.0;
  out.concurrence = 2.0 * std::abs(db + dbt);
  const double lo = std::abs(out.p_minus * out.c_minus - out.p_plus * out.c_plus);
  const double hi = out.p_minus * out.c_minus + out.p_plus * out.c_plus;
  out.sandwich_holds = lo - tol::compare <= out.concurrence && out.concurrence <= hi + tol::compare;
  return out;
}

MajorizationReport majorization_check(const FockState& state, const ModePartition& part) {
  MajorizationReport out;
  const Eigen::VectorXd qsp = qsp_spectrum(state).eigenvalues;
  out.f_plus = qsp[0];
  out.f_minus = qsp[qsp.size() - 1];
  const Eigen::VectorXd la = reduced_spectrum(reduced_state(state, part, Side::A));
  out.lambda_max = la[0];
  out.holds = out.lambda_max <= out.f_plus + tol::compare;

  const std::pair<const char*, EntropyKind> kinds[] = {{"von_neumann", EntropyKind::von_neumann},
                                                       {"quadratic", EntropyKind::quadratic}};
  for (const auto& [name, kind] : kinds) {
    const EntropyFunction f = entropy_function(kind);
    EntropyBound b;
    b.name = name;
    b.s_a = trace_entropy(la, f);
    b.quarter_s_qsp = 0.25 * trace_entropy(qsp, f);
    b.holds = b.s_a >= b.quarter_s_qsp - tol::compare;
    out.holds = out.holds && b.holds;
    out.entropies.push_back(b);
  }
  return out;
}

double schmidt_concurrence(Complex b1, Complex b2, Complex bt1, Complex bt2) {
  const double n = std::norm(b1) + std::norm(b2) + std::norm(bt1) + std::norm(bt2);
  if (std::abs(n - 1.0) > tol::norm) {
    throw Error(ErrorCode::not_normalized, "coefficients have squared norm " + std::to_string(n));
  }
  return 2.0 * std::abs(b1 * b2 + bt1 * bt2);
}

FockState schmidt_state(Complex b1, Complex b2, Complex bt1, Complex bt2) {
  return make_state(4, {{5, b1}, {10, b2}, {0, bt1}, {15, bt2}});
}

}  // namespace fermient
