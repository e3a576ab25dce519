#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "apmc/bitset.hpp"
#include "apmc/sets.hpp"

namespace apmc {

struct ParameterOverflowError : std::runtime_error {
  ParameterOverflowError() : std::runtime_error("no suitable prime field <= 2^16") {}
};
struct EmptyFamilyError : std::runtime_error {
  EmptyFamilyError() : std::runtime_error("cannot encode an empty set family") {}
};
struct LimitExceededError : std::runtime_error {
  explicit LimitExceededError(const char* what) : std::runtime_error(what) {}
};

// A d-superimposed binary code on universe [u] with codewords over [q]: the
// union of at most d codewords is uniquely decodable. decode() returns the
// unique X with encode(X) == bits and |X| <= d, or nullopt.
class SuperimposedCode {
 public:
  enum class Kind { kGeneric, kParity, kFastProduct };

  int u() const { return u_; }
  int q() const { return q_; }
  int d() const { return d_; }
  Kind kind() const { return kind_; }

  const Bitset& word(int x) const { return words_[x]; }
  Bitset encode(const ArcSet& xs) const;
  std::optional<ArcSet> decode(const Bitset& bits) const;

  // Kautz-Singleton: degree-(l-1) polynomial evaluations over the smallest
  // prime field Q with Q^l >= u and Q >= d(l-1)+1; bit (i, f(i)) at i*Q+f(i).
  static SuperimposedCode kautz_singleton(int d, int u);
  // One block (bit, 1-bit) per binary digit, MSB first; 1-superimposed and
  // decodable in linear time, collisions show up as a (1,1) block.
  static SuperimposedCode parity(int u);
  // kautz_singleton(d,u) tensor parity(u); decodable by scanning columns for
  // proper parity codewords and verifying the re-encoding.
  static SuperimposedCode fast_product(int d, int u);

 private:
  int u_ = 0, q_ = 0, d_ = 0;
  Kind kind_ = Kind::kGeneric;
  std::vector<Bitset> words_;
  int outer_len_ = 0, inner_len_ = 0;  // fast product layout
  int parity_bits_ = 0;

  std::optional<ArcSet> decode_generic(const Bitset& bits) const;
  std::optional<int> decode_parity_word(const Bitset& column) const;
  std::optional<ArcSet> decode_fast(const Bitset& bits) const;
};

// K-dimensional 0/1 array over [q]^K stored row-major in a flat bitset.
struct TensorCodeword {
  int dim = 0;
  int base_len = 0;
  Bitset bits;

  static uint64_t length(int base_len, int dim) {
    uint64_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<uint64_t>(base_len);
    return total;
  }
};

inline constexpr uint64_t kTensorBitGuard = uint64_t{1} << 26;

// C^{(x)K}(F): pads the family to K entries by repeating the first set, then
// the K-fold product of per-set codeword bitsets.
TensorCodeword encode_family(const SuperimposedCode& code, int K,
                             const std::vector<ArcSet>& family,
                             uint64_t bit_guard = kTensorBitGuard);

TensorCodeword slice(const TensorCodeword& w, int axis, int value);

// Algorithm 2: collapse by unions of <=k slices (over the distinct nonempty
// slices plus the empty union), diagonal P attached per level, then decode
// each 1-dimensional candidate and keep covering, minimal witnesses.
std::vector<ArcSet> decode_witness(const TensorCodeword& s, const SuperimposedCode& code,
                                   int k);

// Same algorithm with collapse memoization shared across calls; worthwhile
// when many related tensors are decoded (the recursive APMC merge).
class WitnessDecoder {
 public:
  WitnessDecoder(const SuperimposedCode& code, int k);
  ~WitnessDecoder();
  WitnessDecoder(const WitnessDecoder&) = delete;
  WitnessDecoder& operator=(const WitnessDecoder&) = delete;

  std::vector<ArcSet> decode(const TensorCodeword& s);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace apmc
