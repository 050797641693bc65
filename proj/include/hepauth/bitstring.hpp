#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hepauth {

// A sequence of bits (one byte per bit, values 0/1). Challenges, responses
// and measurement-outcome strings all travel as BitString.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) : bits_(nbits, 0) {}

  static BitString from_string(const std::string& s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitString: expected '0'/'1'");
      b.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return b;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v & 1); }
  void push_back(int v) { bits_.push_back(static_cast<std::uint8_t>(v & 1)); }

  bool operator==(const BitString& o) const { return bits_ == o.bits_; }
  bool operator!=(const BitString& o) const { return bits_ != o.bits_; }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
  }

  // Hex encoding packs bits MSB-first into nibbles; the bit count must be
  // carried separately when it is not a multiple of 4.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve((bits_.size() + 3) / 4);
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
      int nib = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        nib <<= 1;
        if (i + j < bits_.size()) nib |= bits_[i + j];
      }
      out.push_back(digits[nib]);
    }
    return out;
  }

  static BitString from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() != (nbits + 3) / 4) throw std::invalid_argument("BitString: hex length mismatch");
    BitString b(nbits);
    for (std::size_t i = 0; i < nbits; ++i) {
      char c = hex[i / 4];
      int nib;
      if (c >= '0' && c <= '9') nib = c - '0';
      else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
      else throw std::invalid_argument("BitString: bad hex digit");
      // Bits fill nibbles from the top; a partial final nibble is zero-padded
      // at the bottom.
      b.bits_[i] = static_cast<std::uint8_t>((nib >> (3 - (i % 4))) & 1);
    }
    return b;
  }

  // Packs the bits MSB-first into bytes (zero-padded tail), for hashing.
  std::vector<std::uint8_t> packed_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
  }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (auto b : bits_) c += b;
    return c;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace hepauth
