/*
 * Copyright 2026 the riskindex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKINDEX_RNG_HPP
#define RISKINDEX_RNG_HPP

#include <cmath>
#include <cstdint>

#include "riskindex/errors.hpp"

namespace riskindex {

// Counter-based randomness: every variate is a pure function of
// (key, counter), so draws are reproducible and order-independent.
// The mixer is the splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag, std::uint64_t index) {
  return mix64(key ^ mix64(tag + 0x632be59bd9b4e019ULL) ^ mix64(index * 0xff51afd7ed558ccdULL + 1));
}

// Uniform on the open interval (0,1); never returns 0 or 1 so inverse-CDF
// transforms stay finite.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
  std::uint64_t h = mix64(key ^ mix64(counter + 0x9e3779b97f4a7c15ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

// Per-draw stream of uniforms: nested distribution specs consume
// dimensions in a fixed depth-first order.
class DrawStream {
 public:
  explicit DrawStream(std::uint64_t key) : key_(key), counter_(0) {}

  double next() { return uniform01(key_, counter_++); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Inverse of the standard normal CDF, Wichura's PPND16 (algorithm AS 241).
// Accurate to about 1e-15 over (0,1).
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::BadLevel, "normal quantile needs p in (0,1)");
  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

// Standard normal CDF via the complementary error function.
inline double normal_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

}  // namespace riskindex

#endif  // RISKINDEX_RNG_HPP
