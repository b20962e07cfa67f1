#pragma once

namespace cpoly {

// Shared tolerance context. Every floating comparison in the library takes
// one of these two knobs.
struct Tolerances {
  double structural = 1e-12;  // hermiticity, trace, basis orthonormality
  double spectral = 1e-10;    // eigenvalues, Gram entries, trace identities
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace cpoly
