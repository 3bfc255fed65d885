// cited.hpp -- externally proven facts used as configuration constants.
// These are inputs taken from the literature, not re-derived here; each one
// carries its citation so reports can name the source.

#pragma once

#include <cstdint>

namespace abcv::cited {

struct Constant {
  const char* name;
  std::uint64_t value;
  const char* citation;
};

// y-caps for the two base-change repunit cases with m = 6
inline constexpr Constant kYCapN11{"y_cap_n11", 8, "Nesterenko-Shorey"};
inline constexpr Constant kYCapN16{"y_cap_n16", 15, "Nesterenko-Shorey"};

// solved-signature cap for [3,3,p]
inline constexpr Constant kChenSiksekPrimeCap{"chen_siksek_prime_cap", 1000000000ULL,
                                              "Chen-Siksek"};

// lower bound on the common difference d in the arithmetic-progression
// equation; enters only through log(d_min) in the r_k formula
inline constexpr Constant kSaradhaShoreyDMin{"saradha_shorey_d_min",
                                             1000000000000000ULL, "Saradha-Shorey"};

}  // namespace abcv::cited
