#pragma once

#include <cstdint>
#include <vector>

#include "hepauth/bitstring.hpp"
#include "hepauth/rng.hpp"

namespace hepauth {

// Weak classical PUF: a seeded deterministic map {0,1}^n -> {0,1}^m whose
// output bits are iid with per-bit bias delta, Pr[bit = 0] = 1/2 + delta.
// The seed is the device identity (the probabilistic function's random coin);
// responses are computed lazily from a keyed mix, never tabulated.
class BiasedCpuf {
 public:
  BiasedCpuf(int n, int m, double delta, std::uint64_t seed);

  int n() const { return n_; }
  int m() const { return m_; }
  double delta() const { return delta_; }
  std::uint64_t seed() const { return seed_; }

  // One-way fingerprint of the device identity, safe to serialize.
  std::uint64_t seed_fingerprint() const;

  // Deterministic response; bit j is 0 iff the keyed uniform draw for
  // (seed, x, j) falls below 1/2 + delta.
  BitString eval(const BitString& x) const;

 private:
  double bit_uniform(const BitString& x, int j) const;

  int n_;
  int m_;
  double delta_;
  std::uint64_t seed_;
};

struct CrpEntry {
  BitString challenge;
  BitString response;
};

// Verifier-side database of challenge-response pairs gathered in the setup
// phase. Challenges are distinct; read-only after build except for
// consume-on-use removal in sequential sessions.
class CrpDatabase {
 public:
  CrpDatabase(int n, int m, double delta, std::uint64_t device_fingerprint)
      : n_(n), m_(m), delta_(delta), device_fingerprint_(device_fingerprint) {}

  int n() const { return n_; }
  int m() const { return m_; }
  double delta() const { return delta_; }
  std::uint64_t device_fingerprint() const { return device_fingerprint_; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CrpEntry& entry(std::size_t i) const { return entries_[i]; }

  void add(CrpEntry e) { entries_.push_back(std::move(e)); }

  // Removes entry i (a used challenge is not reissued).
  void consume(std::size_t i) {
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  int n_;
  int m_;
  double delta_;
  std::uint64_t device_fingerprint_;
  std::vector<CrpEntry> entries_;
};

BitString cpuf_eval(const BiasedCpuf& puf, const BitString& x);

// Pooled-bit estimate of the per-bit p-randomness max_y Pr[bit = y]; for the
// iid bias model this converges to 1/2 + delta. Doubles as a model self-test.
double estimate_p_randomness(const BiasedCpuf& puf, int sample_count, Sampler& rng);

// d distinct uniformly sampled challenges with their responses; d <= 2^n.
CrpDatabase build_crp_database(const BiasedCpuf& puf, std::uint64_t d, Sampler& rng);

// Uniform draw over the remaining entries; returns the index alongside the
// pair so sessions can consume it.
struct DrawnChallenge {
  std::size_t index;
  CrpEntry pair;
};
DrawnChallenge draw_challenge(const CrpDatabase& db, Sampler& rng);

}  // namespace hepauth
