#pragma once

#include <cstdint>
#include <random>

#include "hbcells/cells.hpp"

namespace hbcells {

// Random rational with |numerator| <= 10 and 1 <= denominator <= 10; zero is
// allowed. Plain modulo keeps the stream identical across standard libraries
// (uniform_int_distribution is implementation-defined).
inline Rational random_small_rational(std::mt19937_64& rng) {
  const long long num = static_cast<long long>(rng() % 21) - 10;
  const long long den = static_cast<long long>(rng() % 10) + 1;
  return Rational(num) / Rational(den);
}

// Generator for sample `index` of a run with `seed`; independent of how
// samples are split across workers.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Values for every kept parameter of the cell, in registry order.
inline Assignment random_cell_assignment(const SpreadOutMatrix& m, const CellRestriction& r, std::mt19937_64& rng) {
  Assignment a;
  for (auto slot : r.kept_slots()) a[m.registry()[slot].key] = random_small_rational(rng);
  return a;
}

inline Assignment random_assignment(const SpreadOutMatrix& m, std::mt19937_64& rng) {
  Assignment a;
  for (const auto& p : m.registry()) a[p.key] = random_small_rational(rng);
  return a;
}

}  // namespace hbcells
