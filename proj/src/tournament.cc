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

#include "rpsgraph/tournament.h"

#include <bit>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

absl::Status CheckSize(int n) {
  if (n < 1 || n > kMaxVertices) {
    return absl::OutOfRangeError(
        absl::StrCat("tournament size ", n, " outside [1, ", kMaxVertices,
                     "]"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Tournament> Tournament::FromEdges(int n,
                                                 absl::Span<const Edge> edges) {
  if (absl::Status s = CheckSize(n); !s.ok()) return s;
  Tournament t(n);
  std::vector<bool> seen(NumPairs(n), false);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      return absl::OutOfRangeError(absl::StrCat(
          "vertex out of range in edge (", u, ", ", v, ") for n = ", n));
    }
    if (u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop at vertex ", u));
    }
    const int k = PairIndex(n, std::min(u, v), std::max(u, v));
    if (seen[k]) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate pair {", std::min(u, v), ", ",
                       std::max(u, v), "}"));
    }
    seen[k] = true;
    t.out_[u] |= uint64_t{1} << v;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!seen[PairIndex(n, i, j)]) {
        return absl::InvalidArgumentError(
            absl::StrCat("missing pair {", i, ", ", j, "}"));
      }
    }
  }
  return t;
}

absl::StatusOr<Tournament> Tournament::FromPairs(
    int n, const std::function<bool(int, int)>& i_beats_j) {
  if (absl::Status s = CheckSize(n); !s.ok()) return s;
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i_beats_j(i, j)) {
        t.out_[i] |= uint64_t{1} << j;
      } else {
        t.out_[j] |= uint64_t{1} << i;
      }
    }
  }
  return t;
}

Tournament Tournament::Transitive(int n) {
  return *FromPairs(n, [](int, int) { return true; });
}

uint64_t Tournament::InMask(int i) const {
  uint64_t mask = 0;
  for (int j = 0; j < n_; ++j) {
    if (Beats(j, i)) mask |= uint64_t{1} << j;
  }
  return mask;
}

std::vector<Edge> Tournament::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(NumPairs(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (Beats(i, j)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

Tournament Tournament::Relabel(absl::Span<const int> perm) const {
  Tournament t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (Beats(i, j)) t.out_[perm[i]] |= uint64_t{1} << perm[j];
    }
  }
  return t;
}

Tournament Tournament::Induced(absl::Span<const int> vertices) const {
  Tournament t(static_cast<int>(vertices.size()));
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = 0; b < vertices.size(); ++b) {
      if (a != b && Beats(vertices[a], vertices[b])) {
        t.out_[a] |= uint64_t{1} << b;
      }
    }
  }
  return t;
}

Tournament Tournament::WithEdgeReversed(int i, int j) const {
  Tournament t = *this;
  t.out_[i] ^= uint64_t{1} << j;
  t.out_[j] ^= uint64_t{1} << i;
  return t;
}

PairCode Encode(const Tournament& t) {
  const int n = t.size();
  PairCode code{n, std::string(NumPairs(n), '0')};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (t.Beats(i, j)) code.bits[PairIndex(n, i, j)] = '1';
    }
  }
  return code;
}

absl::StatusOr<Tournament> Decode(const PairCode& code) {
  absl::StatusOr<PairCode> valid = ParsePairCode(code.bits, code.n);
  if (!valid.ok()) return valid.status();
  const int n = code.n;
  return Tournament::FromPairs(n, [&](int i, int j) {
    return code.bits[PairIndex(n, i, j)] == '1';
  });
}

absl::StatusOr<PairCode> ParsePairCode(const std::string& bits,
                                       std::optional<int> n) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      return absl::InvalidArgumentError(
          absl::StrCat("pair code contains non-binary character '",
                       std::string(1, c), "'"));
    }
  }
  const int len = static_cast<int>(bits.size());
  if (n.has_value()) {
    if (absl::Status s = CheckSize(*n); !s.ok()) return s;
    if (len != NumPairs(*n)) {
      return absl::InvalidArgumentError(
          absl::StrCat("pair code length ", len, " does not match n = ", *n,
                       " (expected ", NumPairs(*n), ")"));
    }
    return PairCode{*n, bits};
  }
  int inferred = 1;
  while (NumPairs(inferred) < len) ++inferred;
  if (NumPairs(inferred) != len) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pair code length ", len, " is not n(n-1)/2 for any n"));
  }
  if (absl::Status s = CheckSize(inferred); !s.ok()) return s;
  return PairCode{inferred, bits};
}

uint64_t PackCode(const Tournament& t) {
  const int n = t.size();
  const int m = NumPairs(n);
  uint64_t packed = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (t.Beats(i, j)) packed |= uint64_t{1} << (m - 1 - PairIndex(n, i, j));
    }
  }
  return packed;
}

Tournament UnpackCode(int n, uint64_t packed) {
  const int m = NumPairs(n);
  return *Tournament::FromPairs(n, [&](int i, int j) {
    return (packed >> (m - 1 - PairIndex(n, i, j))) & 1u;
  });
}

std::string PackedToBits(int n, uint64_t packed) {
  const int m = NumPairs(n);
  std::string bits(m, '0');
  for (int k = 0; k < m; ++k) {
    if ((packed >> (m - 1 - k)) & 1u) bits[k] = '1';
  }
  return bits;
}

OutcomeMatrix OutcomeMatrix::FromTournament(const Tournament& t) {
  const int n = t.size();
  std::vector<int> g(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g[i * n + j] = i == j ? 1 : (t.Beats(i, j) ? 2 : 0);
    }
  }
  return OutcomeMatrix(n, std::move(g));
}

absl::StatusOr<OutcomeMatrix> OutcomeMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (absl::Status s = CheckSize(n); !s.ok()) return s;
  std::vector<int> g(n * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has ", rows[i].size(), " entries, want ",
                       n));
    }
    for (int j = 0; j < n; ++j) g[i * n + j] = rows[i][j];
  }
  for (int i = 0; i < n; ++i) {
    if (g[i * n + i] != 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("diagonal entry ", i, " is not 1"));
    }
    for (int j = i + 1; j < n; ++j) {
      const int a = g[i * n + j];
      const int b = g[j * n + i];
      if ((a != 0 && a != 2) || a + b != 2) {
        return absl::InvalidArgumentError(absl::StrCat(
            "entries (", i, ", ", j, ") and (", j, ", ", i,
            ") are not a win/loss pair"));
      }
    }
  }
  return OutcomeMatrix(n, std::move(g));
}

OutcomeMatrix OutcomeMatrix::Submatrix(absl::Span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  std::vector<int> g(k * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      g[a * k + b] = (*this)(indices[a], indices[b]);
    }
  }
  return OutcomeMatrix(k, std::move(g));
}

std::vector<std::vector<int>> OutcomeMatrix::Rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

Degrees ComputeDegrees(const Tournament& t) {
  const int n = t.size();
  Degrees d{std::vector<int>(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    d.out[i] = std::popcount(t.OutMask(i));
    d.in[i] = n - 1 - d.out[i];
  }
  return d;
}

}  // namespace rpsgraph
