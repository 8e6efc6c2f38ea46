// Copyright 2026 The rpsgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RPSGRAPH_RATIONAL_H_
#define RPSGRAPH_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace rpsgraph {

// Arbitrary-precision integers and canonicalized (lowest-terms) fractions.
using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& r);
std::string ToString(const BigInt& z);

// Accepts "p", "-p" and "p/q" with q != 0.
absl::StatusOr<Rational> ParseRational(const std::string& text);

// Least common multiple of the denominators.
BigInt CommonDenominator(absl::Span<const Rational> values);

// Scales `values` by their common denominator.
std::vector<BigInt> ScaleToIntegers(absl::Span<const Rational> values);

}  // namespace rpsgraph

#endif  // RPSGRAPH_RATIONAL_H_
