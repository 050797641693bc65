#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "hepauth/rng.hpp"

namespace hepauth {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;

// Validation tolerances for density-matrix invariants.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-10;

// The four Bell states; the protocol encodings use {PhiPlus, PsiMinus} by
// default and {PhiMinus, PsiPlus} as the alternate set.
enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Local measurement bases: Computational {|0>,|1>}, Hadamard {|+>,|->}.
enum class MeasBasis { Computational, Hadamard };

// Subsystem labels of a two-qubit VP state. Tensor ordering is fixed
// project-wide: index = 2*(V bit) + (P bit), V is the first factor.
enum class Subsystem { V, P };

struct BlochVector {
  double rx = 0.0, ry = 0.0, rz = 0.0;
  double norm() const;
};

// Exact dense density matrix, dimension 2 (one qubit) or 4 (two qubits).
// Every construction path validates Hermiticity, unit trace and positive
// semidefiniteness; instances are immutable.
class DensityMatrix {
 public:
  // Validates and takes ownership; throws std::invalid_argument on a
  // non-physical matrix.
  static DensityMatrix make(MatrixX m);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const MatrixX& mat() const { return m_; }
  Complex entry(int i, int j) const { return m_(i, j); }

  double purity() const;  // Tr(rho^2)

 private:
  explicit DensityMatrix(MatrixX m) : m_(std::move(m)) {}
  MatrixX m_;
};

struct LocalMeasurement {
  int outcome;            // 0 or 1
  DensityMatrix collapsed;  // post-measurement state of the *other* subsystem
  double prob;            // Born probability of the sampled outcome
};

struct SingleMeasurement {
  int outcome;
  double prob;
};

// Projector of the given basis outcome, 2x2.
Matrix2 basis_projector(MeasBasis basis, int outcome);

// Kronecker product of two single-qubit operators, V factor first.
Matrix4 kron2(const Matrix2& v_op, const Matrix2& p_op);

// Pure state vector of a Bell state in the fixed VP ordering.
Eigen::Vector4cd bell_vector(BellKind kind);

// Projector onto the named Bell state.
DensityMatrix bell_state(BellKind kind);

// rho = (I + rx*sx + ry*sy + rz*sz)/2. Rejects |r| > 1 + 1e-12.
DensityMatrix bloch_to_density(const BlochVector& v);

// Inverse of bloch_to_density on one-qubit states.
BlochVector density_to_bloch(const DensityMatrix& rho);

// Reduced state of the kept subsystem of a two-qubit state.
DensityMatrix partial_trace(const DensityMatrix& state, Subsystem keep);

// Born-rule measurement of one subsystem of a two-qubit state; returns the
// sampled outcome, the normalized collapsed state of the remaining subsystem
// and the outcome's probability.
LocalMeasurement measure_local(const DensityMatrix& state, Subsystem which,
                               MeasBasis basis, Sampler& rng);

// Born-rule measurement of a one-qubit state.
SingleMeasurement measure_single(const DensityMatrix& state, MeasBasis basis,
                                 Sampler& rng);

// Fidelity, squared convention: F = (Tr sqrt(sqrt(a) b sqrt(a)))^2.
// Symmetric, 1 iff equal; reduces to Tr(a*b) when b is pure.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// T = (1/2) * sum |eigenvalues(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Trace norm ||m||_1 of a Hermitian matrix (sum of |eigenvalues|); exposed
// for Helstrom-style expressions over weighted state differences.
double trace_norm_hermitian(const MatrixX& m);

}  // namespace hepauth
