#pragma once

#include "bicross/vec.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bicross {

/// Probe policy for "for all" checks. Auto enumerates the basis whenever
/// the relevant tensor-word space has at most `exhaustive_limit` basis
/// words and otherwise falls back to `count` seeded pseudo-random probes;
/// the explicit modes force one behaviour. Random probes are a pure
/// function of the seed, so reports are byte-reproducible.
struct ProbeSet {
  enum class Mode { Auto, Exhaustive, Random };
  Mode mode = Mode::Auto;
  uint64_t seed = 1;
  size_t count = 100;
  size_t exhaustive_limit = 10000;

  static ProbeSet exhaustive() { return {Mode::Exhaustive, 0, 0, 0}; }
  static ProbeSet random(uint64_t seed, size_t count = 100) {
    return {Mode::Random, seed, count, 0};
  }
  static ProbeSet automatic(uint64_t seed, size_t count = 100, size_t limit = 10000) {
    return {Mode::Auto, seed, count, limit};
  }

  std::string describe() const;

  /// Basis-word probes (exhaustive) or random small vectors for a shape.
  /// Random probes mix single basis words with 2-3 term combinations so a
  /// failure of linearity would also surface.
  std::vector<Vec> vectors(const Shape& shape) const;

  /// Tuples of group elements, exhaustive over the product when affordable.
  std::vector<std::vector<GroupElement>> group_tuples(
      const std::vector<GroupPtr>& groups) const;

  bool wants_exhaustive(size_t dim) const {
    return mode == Mode::Exhaustive || (mode == Mode::Auto && dim <= exhaustive_limit);
  }
};

/// One random basis word of the given shape.
Word random_word(const Shape& shape, std::mt19937_64& rng);

/// Small random scalar (bounded numerators/denominators), never zero.
Scalar random_scalar(std::mt19937_64& rng);

}  // namespace bicross
