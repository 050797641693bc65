#include "hepauth/hepuf.hpp"

namespace hepauth {

SplitResponse split_response(const BitString& y) {
  if (y.size() % 2 != 0)
    throw std::invalid_argument("split_response: response length must be even");
  std::size_t k = y.size() / 2;
  SplitResponse s{BitString(k), BitString(k)};
  for (std::size_t i = 0; i < k; ++i) {
    s.y1.set(i, y[i]);
    s.y2.set(i, y[k + i]);
  }
  return s;
}

HepufDevice::HepufDevice(BiasedCpuf cpuf, std::pair<BellKind, BellKind> state_set)
    : cpuf_(std::move(cpuf)), state_set_(state_set) {
  if (cpuf_.m() % 2 != 0)
    throw std::invalid_argument("HepufDevice: CPUF output length must be even");
  if (state_set_.first == state_set_.second)
    throw std::invalid_argument("HepufDevice: state set must hold two distinct Bell states");
}

void HepufDevice::set_mode(int new_mode) {
  if (new_mode < 0 || new_mode > 2)
    throw std::invalid_argument("HepufDevice: mode must be 0, 1 or 2");
  if (new_mode == 0) {
    if (mode0_locked_) throw RelockAttempt();
    return;  // still in the setup mode
  }
  mode_ = new_mode;
  mode0_locked_ = true;  // leaving mode 0 is one-way
}

BitString HepufDevice::eval_mode0(const BitString& x) {
  if (mode0_locked_ || mode_ != 0) throw CalledAfterLock();
  return cpuf_.eval(x);
}

std::vector<PairRef> HepufDevice::eval_mode1(const BitString& x) {
  if (mode_ != 1) throw WrongMode("HEPUF: Eval requires mode 1");
  SplitResponse s = split_response(cpuf_.eval(x));
  basis_bits_ = s.y1;
  retained_.clear();
  retained_.reserve(s.y2.size());
  // Bell projectors cached once; handles get private copies.
  static const DensityMatrix kBell[4] = {
      bell_state(BellKind::PhiPlus), bell_state(BellKind::PhiMinus),
      bell_state(BellKind::PsiPlus), bell_state(BellKind::PsiMinus)};
  for (std::size_t i = 0; i < s.y2.size(); ++i) {
    BellKind kind = s.y2[i] == 0 ? state_set_.first : state_set_.second;
    retained_.push_back(std::make_shared<EntangledPair>(kBell[static_cast<int>(kind)]));
  }
  return retained_;
}

BitString HepufDevice::measure_mode2(Sampler& rng) {
  if (mode_ != 2) throw WrongMode("HEPUF: Measure requires mode 2");
  if (retained_.empty()) throw NothingRetained();
  BitString b(retained_.size());
  for (std::size_t i = 0; i < retained_.size(); ++i) {
    MeasBasis basis =
        basis_bits_[i] == 0 ? MeasBasis::Computational : MeasBasis::Hadamard;
    b.set(i, retained_[i]->measure(/*qubit=*/1, basis, rng).outcome);
  }
  retained_.clear();
  return b;
}

}  // namespace hepauth
