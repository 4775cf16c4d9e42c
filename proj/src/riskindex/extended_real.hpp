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

#ifndef RISKINDEX_EXTENDED_REAL_HPP
#define RISKINDEX_EXTENDED_REAL_HPP

#include <cmath>
#include <limits>

#include "riskindex/errors.hpp"

namespace riskindex {

// Value on the extended real line. Risk measures over a bounded search
// bracket legitimately evaluate to +inf or -inf, so the tag is explicit
// rather than relying on IEEE infinities leaking through arithmetic.
class ExtendedReal {
 public:
  enum class Tag { Finite, PlusInfinity, MinusInfinity };

  ExtendedReal() : tag_(Tag::Finite), value_(0.0) {}

  static ExtendedReal finite(double v) {
    if (!std::isfinite(v)) fail(ErrorKind::NonFiniteValue, "finite tag requires a finite value");
    ExtendedReal r;
    r.tag_ = Tag::Finite;
    r.value_ = v;
    return r;
  }
  static ExtendedReal plus_infinity() {
    ExtendedReal r;
    r.tag_ = Tag::PlusInfinity;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }
  static ExtendedReal minus_infinity() {
    ExtendedReal r;
    r.tag_ = Tag::MinusInfinity;
    r.value_ = -std::numeric_limits<double>::infinity();
    return r;
  }
  static ExtendedReal from_double(double v) {
    if (std::isnan(v)) fail(ErrorKind::NonFiniteValue, "NaN is not an extended real");
    if (v == std::numeric_limits<double>::infinity()) return plus_infinity();
    if (v == -std::numeric_limits<double>::infinity()) return minus_infinity();
    return finite(v);
  }

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_plus_infinity() const { return tag_ == Tag::PlusInfinity; }
  bool is_minus_infinity() const { return tag_ == Tag::MinusInfinity; }

  // Finite payload; +-inf as IEEE infinities.
  double as_double() const { return value_; }

  double finite_value() const {
    if (!is_finite()) fail(ErrorKind::Internal, "extended real is not finite");
    return value_;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
  }

 private:
  Tag tag_;
  double value_;
};

}  // namespace riskindex

#endif  // RISKINDEX_EXTENDED_REAL_HPP
