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

#include "rpsgraph/rational.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

bool IsIntegerLiteral(const std::string& s) {
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::string ToString(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ToString(const BigInt& z) { return z.get_str(); }

absl::StatusOr<Rational> ParseRational(const std::string& text) {
  const size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den[0] == '-') {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed rational \"", text, "\""));
  }
  const BigInt d(den);
  if (d == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("zero denominator in \"", text, "\""));
  }
  Rational r{BigInt(num), d};
  r.canonicalize();
  return r;
}

BigInt CommonDenominator(absl::Span<const Rational> values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::vector<BigInt> ScaleToIntegers(absl::Span<const Rational> values) {
  const BigInt l = CommonDenominator(values);
  std::vector<BigInt> scaled;
  scaled.reserve(values.size());
  for (const Rational& v : values) {
    scaled.push_back(v.get_num() * (l / v.get_den()));
  }
  return scaled;
}

}  // namespace rpsgraph
