#include "hepauth/puf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hepauth {

namespace {

// Keyed 64-bit mix over (seed, message bytes, tweak). Deterministic and
// platform-independent; this is the PUF's "physical randomness".
std::uint64_t keyed_mix(std::uint64_t seed, const std::vector<std::uint8_t>& bytes,
                        std::uint64_t tweak) {
  std::uint64_t h = splitmix64(seed ^ 0xa0761d6478bd642full);
  std::uint64_t chunk = 0;
  int filled = 0;
  for (std::uint8_t b : bytes) {
    chunk |= static_cast<std::uint64_t>(b) << (8 * filled);
    if (++filled == 8) {
      h = splitmix64(h ^ chunk);
      chunk = 0;
      filled = 0;
    }
  }
  h = splitmix64(h ^ chunk ^ (static_cast<std::uint64_t>(bytes.size()) << 56));
  return splitmix64(h ^ tweak);
}

double to_unit_interval(std::uint64_t v) {
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

}  // namespace

BiasedCpuf::BiasedCpuf(int n, int m, double delta, std::uint64_t seed)
    : n_(n), m_(m), delta_(delta), seed_(seed) {
  if (n <= 0 || m <= 0) throw std::invalid_argument("BiasedCpuf: n, m must be positive");
  if (delta < 0.0 || delta > 0.5)
    throw std::invalid_argument("BiasedCpuf: delta must lie in [0, 1/2]");
}

std::uint64_t BiasedCpuf::seed_fingerprint() const {
  return splitmix64(seed_ ^ 0x6670707566736565ull);
}

double BiasedCpuf::bit_uniform(const BitString& x, int j) const {
  return to_unit_interval(keyed_mix(seed_, x.packed_bytes(), static_cast<std::uint64_t>(j)));
}

BitString BiasedCpuf::eval(const BitString& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("BiasedCpuf::eval: wrong challenge length");
  BitString y(static_cast<std::size_t>(m_));
  for (int j = 0; j < m_; ++j)
    y.set(static_cast<std::size_t>(j), bit_uniform(x, j) < 0.5 + delta_ ? 0 : 1);
  return y;
}

BitString cpuf_eval(const BiasedCpuf& puf, const BitString& x) { return puf.eval(x); }

double estimate_p_randomness(const BiasedCpuf& puf, int sample_count, Sampler& rng) {
  if (sample_count < 1)
    throw std::invalid_argument("estimate_p_randomness: sample_count >= 1 required");
  std::uint64_t zeros = 0, total = 0;
  for (int i = 0; i < sample_count; ++i) {
    BitString y = puf.eval(rng.random_bits(static_cast<std::size_t>(puf.n())));
    total += y.size();
    zeros += y.size() - y.count_ones();
  }
  double f0 = static_cast<double>(zeros) / static_cast<double>(total);
  return std::max(f0, 1.0 - f0);
}

CrpDatabase build_crp_database(const BiasedCpuf& puf, std::uint64_t d, Sampler& rng) {
  const int n = puf.n();
  const bool small_space = n < 63;
  if (small_space && d > (1ull << n))
    throw std::invalid_argument("build_crp_database: d exceeds 2^n");
  CrpDatabase db(n, puf.m(), puf.delta(), puf.seed_fingerprint());
  if (d == 0) return db;

  auto challenge_from_value = [&](std::uint64_t v) {
    BitString x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x.set(static_cast<std::size_t>(i), (v >> i) & 1);
    return x;
  };

  if (small_space && d * 2 >= (1ull << n)) {
    // Dense request: partial Fisher-Yates over the whole challenge space.
    std::vector<std::uint64_t> all(1ull << n);
    std::iota(all.begin(), all.end(), 0ull);
    for (std::uint64_t i = 0; i < d; ++i) {
      std::uint64_t j = i + rng.below(all.size() - i);
      std::swap(all[i], all[j]);
      BitString x = challenge_from_value(all[i]);
      db.add(CrpEntry{x, puf.eval(x)});
    }
    return db;
  }

  std::unordered_set<std::string> seen;
  while (db.size() < d) {
    BitString x = rng.random_bits(static_cast<std::size_t>(n));
    if (!seen.insert(x.to_hex()).second) continue;
    db.add(CrpEntry{x, puf.eval(x)});
  }
  return db;
}

DrawnChallenge draw_challenge(const CrpDatabase& db, Sampler& rng) {
  if (db.empty()) throw std::out_of_range("draw_challenge: empty database");
  std::size_t i = static_cast<std::size_t>(rng.below(db.size()));
  return DrawnChallenge{i, db.entry(i)};
}

}  // namespace hepauth
