#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace avkde::rng {

//! SplitMix64 finalizer; used to derive Philox keys from structured fields.
std::uint64_t mix64(std::uint64_t x);

//! Counter-based generator (Philox4x32-10). A stream is identified by a
//! 128-bit (key, stream-id) pair; draws walk a 64-bit block counter, so any
//! stream can be recreated from its identity alone. Forked substreams are
//! derived from the identity, never from the draw position, which keeps
//! results independent of how much the parent has been consumed.
class Stream {
public:
  Stream() : Stream(0, 0) {}
  Stream(std::uint64_t key, std::uint64_t stream_id);

  //! Hash a tuple of fields (seed, density, n, replication, ...) into a stream.
  static Stream from_fields(std::initializer_list<std::uint64_t> fields);

  //! Independent substream addressed by a tag; deterministic in (identity, tag).
  Stream fork(std::uint64_t tag) const;

  std::uint64_t next_u64();

  //! Uniform on the open interval (0, 1); 53-bit resolution, never 0 or 1.
  double uniform01();

  //! Standard normal via Box-Muller (two uniforms per draw, no cached spare).
  double normal();

  //! Unit-rate exponential, -log(U).
  double exponential();

  //! Standard Cauchy via tan(π(U - 1/2)).
  double cauchy();

  //! Uniform integer in [0, bound); unbiased by rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound);

private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // exhausted; refill on first draw
  std::uint64_t ident_key_;
  std::uint64_t ident_stream_;
};

}  // namespace avkde::rng
