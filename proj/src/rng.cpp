#include "avkde/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace avkde::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
  std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
  std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
  c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

std::array<std::uint32_t, 4> philox10(std::array<std::uint32_t, 4> counter,
                                      std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key[0], key[1]);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Stream::Stream(std::uint64_t key, std::uint64_t stream_id)
  : ident_key_(key), ident_stream_(stream_id) {
  key_ = {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  // Counter words 0..1 hold the running block index; 2..3 pin the stream id.
  counter_ = {0, 0, static_cast<std::uint32_t>(stream_id),
              static_cast<std::uint32_t>(stream_id >> 32)};
}

Stream Stream::from_fields(std::initializer_list<std::uint64_t> fields) {
  std::uint64_t acc = 0x243F6A8885A308D3ull;  // arbitrary nonzero start
  for (std::uint64_t f : fields) acc = mix64(acc ^ f);
  return Stream(acc, mix64(acc ^ 0x452821E638D01377ull));
}

Stream Stream::fork(std::uint64_t tag) const {
  std::uint64_t k = mix64(ident_key_ ^ mix64(tag));
  std::uint64_t s = mix64(ident_stream_ ^ mix64(tag ^ 0xA5A5A5A5A5A5A5A5ull));
  return Stream(k, s);
}

void Stream::refill() {
  block_ = philox10(counter_, key_);
  block_pos_ = 0;
  if (++counter_[0] == 0) ++counter_[1];
}

std::uint64_t Stream::next_u64() {
  if (block_pos_ >= 4) refill();
  std::uint64_t lo = block_[block_pos_];
  std::uint64_t hi = block_[block_pos_ + 1];
  block_pos_ += 2;
  return lo | (hi << 32);
}

double Stream::uniform01() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Stream::exponential() {
  return -std::log(uniform01());
}

double Stream::cauchy() {
  return std::tan(std::numbers::pi * (uniform01() - 0.5));
}

std::uint64_t Stream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Stream::below: bound must be positive");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

}  // namespace avkde::rng
