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

#include "rpsgraph/linear_system.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

// In-place Bareiss elimination over the first `pivots` columns of the rows
// of `a`. Returns the sign of the row permutation applied, or 0 if singular.
int Eliminate(IntMatrix& a, int pivots) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int sign = 1;
  BigInt previous = 1;
  BigInt scratch;
  for (int k = 0; k < pivots; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < rows && a[r][k] == 0) ++r;
      if (r == rows) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        scratch = a[i][j] * a[k][k];
        scratch -= a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), scratch.get_mpz_t(),
                     previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign;
}

}  // namespace

absl::StatusOr<ExactSolution> SolveFractionFree(IntMatrix a,
                                                std::vector<BigInt> b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "right-hand side has ", b.size(), " entries, matrix has ", n, " rows"));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) {
      return absl::InvalidArgumentError("matrix is not square");
    }
    a[i].push_back(std::move(b[i]));
  }
  const int sign = Eliminate(a, n);
  if (sign == 0) return absl::FailedPreconditionError("singular matrix");

  ExactSolution solution;
  solution.determinant = n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
  solution.values.assign(n, Rational(0));
  for (int i = n - 1; i >= 0; --i) {
    Rational acc(a[i][n]);
    for (int j = i + 1; j < n; ++j) acc -= a[i][j] * solution.values[j];
    acc /= a[i][i];
    solution.values[i] = acc;
  }
  return solution;
}

BigInt Determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  const int sign = Eliminate(a, n);
  if (sign == 0) return 0;
  return sign * a[n - 1][n - 1];
}

}  // namespace rpsgraph
