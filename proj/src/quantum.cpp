#include "hepauth/quantum.hpp"

#include <cmath>

namespace hepauth {

namespace {

const Complex kI(0.0, 1.0);

void check_physical(const MatrixX& m) {
  const auto n = m.rows();
  if ((n != 2 && n != 4) || m.cols() != n)
    throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<MatrixX> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

// Tr(A * B) without forming the product.
Complex trace_of_product(const MatrixX& a, const MatrixX& b) {
  return (a.array() * b.transpose().array()).sum();
}

// Hermitian square root via eigendecomposition, negative round-off clamped.
MatrixX sqrt_psd(const MatrixX& m) {
  Eigen::SelfAdjointEigenSolver<MatrixX> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }

DensityMatrix DensityMatrix::make(MatrixX m) {
  check_physical(m);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  double n2 = psi.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("DensityMatrix::pure: state vector not normalized");
  return make(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return make(MatrixX::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  return trace_of_product(m_, m_).real();
}

Matrix2 basis_projector(MeasBasis basis, int outcome) {
  Matrix2 p;
  if (basis == MeasBasis::Computational) {
    p.setZero();
    p(outcome, outcome) = 1.0;
  } else {
    double s = outcome == 0 ? 0.5 : -0.5;  // |+><+| or |-><-|
    p << 0.5, s, s, 0.5;
  }
  return p;
}

Matrix4 kron2(const Matrix2& v_op, const Matrix2& p_op) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = v_op(i, j) * p_op;
  return out;
}

Eigen::Vector4cd bell_vector(BellKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (kind) {
    case BellKind::PhiPlus:  v(0) = s;  v(3) = s;  break;  // (|00> + |11>)/sqrt2
    case BellKind::PhiMinus: v(0) = s;  v(3) = -s; break;  // (|00> - |11>)/sqrt2
    case BellKind::PsiPlus:  v(1) = s;  v(2) = s;  break;  // (|01> + |10>)/sqrt2
    case BellKind::PsiMinus: v(1) = s;  v(2) = -s; break;  // (|01> - |10>)/sqrt2
  }
  return v;
}

DensityMatrix bell_state(BellKind kind) {
  // Projector entries are exact dyadic rationals (+-1/2), so downstream
  // protocol probabilities stay exact in binary floating point.
  Eigen::Vector4cd v = bell_vector(kind);
  MatrixX m = v * v.adjoint();
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      double re = std::round(m(i, j).real() * 2.0) / 2.0;
      m(i, j) = Complex(re, 0.0);
    }
  return DensityMatrix::make(std::move(m));
}

DensityMatrix bloch_to_density(const BlochVector& v) {
  if (v.norm() > 1.0 + 1e-12)
    throw std::invalid_argument("bloch_to_density: vector outside the Bloch ball");
  Matrix2 m;
  m(0, 0) = Complex(0.5 * (1.0 + v.rz), 0.0);
  m(1, 1) = Complex(0.5 * (1.0 - v.rz), 0.0);
  m(0, 1) = 0.5 * Complex(v.rx, -v.ry);
  m(1, 0) = 0.5 * Complex(v.rx, v.ry);
  return DensityMatrix::make(m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("density_to_bloch: one-qubit state required");
  BlochVector v;
  v.rx = 2.0 * rho.entry(1, 0).real();
  v.ry = 2.0 * rho.entry(1, 0).imag();
  v.rz = (rho.entry(0, 0) - rho.entry(1, 1)).real();
  return v;
}

DensityMatrix partial_trace(const DensityMatrix& state, Subsystem keep) {
  if (state.dim() != 4)
    throw std::invalid_argument("partial_trace: two-qubit state required");
  const MatrixX& m = state.mat();
  MatrixX out = MatrixX::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int t = 0; t < 2; ++t) {
        // index = 2*v + p
        if (keep == Subsystem::V)
          out(a, b) += m(2 * a + t, 2 * b + t);
        else
          out(a, b) += m(2 * t + a, 2 * t + b);
      }
  return DensityMatrix::make(std::move(out));
}

LocalMeasurement measure_local(const DensityMatrix& state, Subsystem which,
                               MeasBasis basis, Sampler& rng) {
  if (state.dim() != 4)
    throw std::invalid_argument("measure_local: two-qubit state required");
  const Matrix2 eye = Matrix2::Identity();
  Matrix4 lift0 = which == Subsystem::V ? kron2(basis_projector(basis, 0), eye)
                                        : kron2(eye, basis_projector(basis, 0));
  double p0 = trace_of_product(lift0, state.mat()).real();
  int outcome = rng.uniform() < p0 ? 0 : 1;
  double prob = outcome == 0 ? p0 : 1.0 - p0;
  if (prob <= 0.0)
    throw std::logic_error("measure_local: zero-probability branch sampled");
  Matrix4 lift = outcome == 0
                     ? lift0
                     : (which == Subsystem::V
                            ? kron2(basis_projector(basis, 1), eye)
                            : kron2(eye, basis_projector(basis, 1)));
  MatrixX projected = lift * state.mat() * lift / prob;
  // Collapsed state of the remaining subsystem.
  Subsystem other = which == Subsystem::V ? Subsystem::P : Subsystem::V;
  DensityMatrix collapsed =
      partial_trace(DensityMatrix::make(std::move(projected)), other);
  return LocalMeasurement{outcome, std::move(collapsed), prob};
}

SingleMeasurement measure_single(const DensityMatrix& state, MeasBasis basis,
                                 Sampler& rng) {
  if (state.dim() != 2)
    throw std::invalid_argument("measure_single: one-qubit state required");
  double p0 = trace_of_product(basis_projector(basis, 0), state.mat()).real();
  int outcome = rng.uniform() < p0 ? 0 : 1;
  return SingleMeasurement{outcome, outcome == 0 ? p0 : 1.0 - p0};
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  if (std::abs(b.purity() - 1.0) < 1e-9 || std::abs(a.purity() - 1.0) < 1e-9) {
    // Pure on either side: F = Tr(a*b).
    double f = trace_of_product(a.mat(), b.mat()).real();
    return std::clamp(f, 0.0, 1.0);
  }
  MatrixX sa = sqrt_psd(a.mat());
  MatrixX inner = sqrt_psd(sa * b.mat() * sa);
  double root_f = inner.trace().real();
  return std::clamp(root_f * root_f, 0.0, 1.0);
}

double trace_norm_hermitian(const MatrixX& m) {
  Eigen::SelfAdjointEigenSolver<MatrixX> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  return 0.5 * trace_norm_hermitian(a.mat() - b.mat());
}

}  // namespace hepauth
