#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hepauth/entangled_pair.hpp"
#include "hepauth/puf.hpp"

namespace hepauth {

struct WrongMode : std::logic_error {
  explicit WrongMode(const char* what) : std::logic_error(what) {}
};
struct CalledAfterLock : std::logic_error {
  CalledAfterLock() : std::logic_error("HEPUF: mode-0 evaluation after lock") {}
};
struct RelockAttempt : std::logic_error {
  RelockAttempt() : std::logic_error("HEPUF: cannot re-enter mode 0") {}
};
struct NothingRetained : std::logic_error {
  NothingRetained() : std::logic_error("HEPUF: measure called with nothing retained") {}
};

// Response split y = y1 || y2: y1 selects measurement bases, y2 selects the
// encoded Bell states. One bit of each per pair, k = m/2 pairs per challenge.
struct SplitResponse {
  BitString y1;
  BitString y2;
};
SplitResponse split_response(const BitString& y);

// Hybrid Entangled PUF: wraps a BiasedCpuf with three operating modes.
//   mode 0: classical readout, setup only, permanently locked once left
//   mode 1: evaluate the CPUF and encode y2 into Bell pairs, retaining the
//           P subsystems and emitting the V subsystems
//   mode 2: measure the retained P subsystems in the bases named by y1
// Single-owner mutable state; confine one device to one session thread.
class HepufDevice {
 public:
  explicit HepufDevice(BiasedCpuf cpuf,
                       std::pair<BellKind, BellKind> state_set = {BellKind::PhiPlus,
                                                                  BellKind::PsiMinus});

  const BiasedCpuf& cpuf() const { return cpuf_; }
  int mode() const { return mode_; }
  bool mode0_locked() const { return mode0_locked_; }
  int pair_count() const { return cpuf_.m() / 2; }
  std::pair<BellKind, BellKind> state_set() const { return state_set_; }

  // new_mode 0 is only reachable while the device has never left mode 0.
  void set_mode(int new_mode);

  // Full classical response; verifier setup only.
  BitString eval_mode0(const BitString& x);

  // Encodes y2 into k Bell pairs, caches y1, retains the joint handles and
  // returns them for channel transport (the V subsystem is what the wire
  // carries; its reduced state is maximally mixed for every pair).
  std::vector<PairRef> eval_mode1(const BitString& x);

  // Measures each retained P subsystem in the y1-indexed basis; returns the
  // outcome string and clears the retention.
  BitString measure_mode2(Sampler& rng);

  // y1 cached by the most recent mode-1 evaluation (simulation visibility).
  const BitString& cached_basis_bits() const { return basis_bits_; }
  const std::vector<PairRef>& retained() const { return retained_; }

 private:
  BiasedCpuf cpuf_;
  std::pair<BellKind, BellKind> state_set_;
  int mode_ = 0;
  bool mode0_locked_ = false;
  BitString basis_bits_;
  std::vector<PairRef> retained_;
};

}  // namespace hepauth
