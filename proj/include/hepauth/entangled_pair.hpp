#pragma once

#include <memory>

#include "hepauth/quantum.hpp"

namespace hepauth {

// One distributed entangled pair with shared-handle collapse semantics: the
// device (or source) and the channel hold the same handle, so a local
// measurement on one subsystem conditions every later measurement through it.
// Holds the VP joint state (two qubits) or, for an adversarially purified
// source, the VPA joint state (three qubits, A = adversary register).
// Qubit indices: 0 = V, 1 = P, 2 = A; V is the most significant tensor factor.
class EntangledPair {
 public:
  struct MeasResult {
    int outcome;
    double prob;
  };

  explicit EntangledPair(const DensityMatrix& joint_vp)
      : rho_(joint_vp.mat()), nq_(2) {
    if (joint_vp.dim() != 4)
      throw std::invalid_argument("EntangledPair: VP joint state must be 4x4");
  }

  // Purified tripartite pure state, |psi| of dimension 8.
  static EntangledPair purified(const Eigen::VectorXcd& psi_vpa) {
    if (psi_vpa.size() != 8 || std::abs(psi_vpa.squaredNorm() - 1.0) > 1e-9)
      throw std::invalid_argument("EntangledPair: purification must be a normalized 8-vector");
    EntangledPair p;
    p.rho_ = psi_vpa * psi_vpa.adjoint();
    p.nq_ = 3;
    return p;
  }

  int qubit_count() const { return nq_; }

  // Projective measurement in a named basis; collapses the joint state.
  MeasResult measure(int qubit, MeasBasis basis, Sampler& rng) {
    return measure_projective(qubit, basis_projector(basis, 0), rng);
  }

  // Binary projective measurement {proj0, I - proj0} on one qubit.
  MeasResult measure_projective(int qubit, const Matrix2& proj0, Sampler& rng) {
    MatrixX lift0 = lift(proj0, qubit);
    double p0 = trace_with(lift0);
    int outcome = rng.uniform() < p0 ? 0 : 1;
    double prob = outcome == 0 ? p0 : 1.0 - p0;
    if (prob <= 0.0)
      throw std::logic_error("EntangledPair: zero-probability branch sampled");
    MatrixX l = outcome == 0 ? std::move(lift0)
                             : lift(Matrix2::Identity() - proj0, qubit);
    rho_ = (l * rho_ * l) / prob;
    return MeasResult{outcome, prob};
  }

  // Outcome sample without collapse, for a final measurement whose
  // post-state nobody reads.
  MeasResult sample_outcome(int qubit, MeasBasis basis, Sampler& rng) const {
    double p0 = outcome_prob(qubit, basis, 0);
    int outcome = rng.uniform() < p0 ? 0 : 1;
    return MeasResult{outcome, outcome == 0 ? p0 : 1.0 - p0};
  }

  double outcome_prob(int qubit, MeasBasis basis, int outcome) const {
    return trace_with(lift(basis_projector(basis, outcome), qubit));
  }

  // Reduced one-qubit state.
  DensityMatrix reduced(int qubit) const {
    const int nq = nq_;
    const int others = nq - 1;
    MatrixX out = MatrixX::Zero(2, 2);
    const int shift = nq - 1 - qubit;  // qubit 0 is most significant
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int t = 0; t < (1 << others); ++t) {
          int row = insert_bit(t, shift, a);
          int col = insert_bit(t, shift, b);
          out(a, b) += rho_(row, col);
        }
    return DensityMatrix::make(std::move(out));
  }

  // VP state as a 4x4 density matrix; traces out A when present.
  DensityMatrix vp_state() const {
    if (nq_ == 2) return DensityMatrix::make(rho_);
    MatrixX out = MatrixX::Zero(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        for (int t = 0; t < 2; ++t) out(r, c) += rho_(2 * r + t, 2 * c + t);
    return DensityMatrix::make(std::move(out));
  }

  DensityMatrix adversary_state() const {
    if (nq_ != 3) throw std::logic_error("EntangledPair: no adversary register");
    return reduced(2);
  }

  const MatrixX& joint() const { return rho_; }

 private:
  EntangledPair() = default;

  static int insert_bit(int value, int pos, int bit) {
    int high = value >> pos;
    int low = value & ((1 << pos) - 1);
    return (high << (pos + 1)) | (bit << pos) | low;
  }

  MatrixX lift(const Matrix2& op, int qubit) const {
    MatrixX m = MatrixX::Ones(1, 1);
    for (int q = 0; q < nq_; ++q) {
      const MatrixX& f = q == qubit ? static_cast<MatrixX>(op)
                                    : static_cast<MatrixX>(Matrix2::Identity());
      MatrixX next(m.rows() * 2, m.cols() * 2);
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
      m = std::move(next);
    }
    return m;
  }

  double trace_with(const MatrixX& op) const {
    return (op.array() * rho_.transpose().array()).sum().real();
  }

  MatrixX rho_;
  int nq_ = 2;
};

using PairRef = std::shared_ptr<EntangledPair>;

}  // namespace hepauth
