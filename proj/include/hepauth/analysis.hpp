#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hepauth {

// Adversary game strategy of the online security analysis: Bloch components
// of the two candidate states (y components do not enter the outcome
// probabilities and stay 0) plus the probability q0 of claiming bit 0.
struct StrategyParams {
  double rx = 0.0, rz = 0.0;    // state sent with claimed bit 0
  double rpx = 0.0, rpz = 0.0;  // state sent with claimed bit 1
  double q0 = 1.0;

  bool valid() const {
    return rx * rx + rz * rz <= 1.0 + 1e-12 &&
           rpx * rpx + rpz * rpz <= 1.0 + 1e-12 && q0 >= 0.0 && q0 <= 1.0;
  }
};

struct OptimizationResult {
  StrategyParams best_params;
  double best_value = 0.0;
  double grid_resolution = 0.0;
  long long evaluations = 0;
};

struct SecurityRow {
  std::string protocol;
  bool recomputed = false;
  double per_round_bound = 0.0;  // meaningful only when recomputed
  double m_round_bound = 0.0;
  std::string per_round_text;    // formula text for literature rows
  std::string m_round_text;
};

struct Fig3Row {
  double delta;
  double per_round;
  double after_m_rounds;
};

// Optimal per-round forgery probability 1/2 + delta*sqrt((1+4*delta^2)/2).
double pr_win_closed_form(double delta);

// Exact winning probability of an arbitrary game strategy.
double pr_win_objective(double delta, const StrategyParams& p);

// Optimal Bloch components ((1-2d)/sqrt(2+8d^2), (1+2d)/sqrt(2+8d^2)).
void optimal_bloch_components(double delta, double* rx, double* rz);

// Exhaustive polar-grid maximization of pr_win_objective over both Bloch
// disks and q0 in {0, 1/4, 1/2, 3/4, 1}. Oracle for the optimal-strategy
// claims; resolution coarser than 0.01 is rejected.
OptimizationResult optimize_grid(double delta, double resolution);

namespace detail {
// Same search without the resolution guard (tests cross-check coarse grids
// against a literal product-grid scan).
OptimizationResult optimize_grid_any(double delta, double resolution);
}  // namespace detail

// h2(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy(double p);

// mu(eps) = 2 sqrt(eps) + h2(2 sqrt(eps)); domain eps in [0, 1/4].
double mu_epsilon(double epsilon);

// Noisy-entanglement forgery bound 2^(-m (1 - mu(eps))), clamped to [0, 1].
double noisy_forgery_bound(int m, double epsilon);

// Per-round guess bounds for the purification adversary; both clamped to 1.
double per_round_guess_bound_mu(double epsilon);          // 1/2 + mu(eps)
double per_round_guess_bound_minentropy(double epsilon);  // 2^-(1 - mu(eps))

// Optimal probability of guessing a basis bit from one adaptive query:
// 1/2 + delta (the Helstrom value at the biased y1 prior).
double helstrom_guess_prob(double delta);

double m_round_success(double per_round, int m);

struct WilsonInterval {
  double lo;
  double hi;
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

std::vector<Fig3Row> figure3_curves(const std::vector<double>& delta_grid, int m);

// Security-comparison rows: two literature rows as non-recomputed formula
// text, then this work's offline and online protocols with numeric bounds.
std::vector<SecurityRow> table1_rows(int m, double delta);

}  // namespace hepauth
