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

#include "rpsgraph/canonical.h"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

// For every relabeling of n vertices, the source bit feeding each target
// pair of the relabeled code. Row k describes the relabeling whose inverse is
// the k-th permutation in lexicographic order.
struct RelabelingTable {
  int n = 0;
  int m = 0;
  int count = 0;
  std::vector<uint8_t> shift;  // count * m, source bit position
  std::vector<uint8_t> flip;   // count * m, 1 when the source pair is reversed
  std::vector<uint8_t> inverse;  // count * n

  explicit RelabelingTable(int size) : n(size), m(NumPairs(size)) {
    std::vector<int> inv(n);
    std::iota(inv.begin(), inv.end(), 0);
    do {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          const int u = inv[a];
          const int v = inv[b];
          const int src = u < v ? PairIndex(n, u, v) : PairIndex(n, v, u);
          shift.push_back(static_cast<uint8_t>(m - 1 - src));
          flip.push_back(u < v ? 0 : 1);
        }
      }
      for (int a = 0; a < n; ++a) inverse.push_back(static_cast<uint8_t>(inv[a]));
      ++count;
    } while (std::next_permutation(inv.begin(), inv.end()));
  }

  std::vector<int> Witness(int k) const {
    std::vector<int> perm(n);
    for (int a = 0; a < n; ++a) perm[inverse[k * n + a]] = a;
    return perm;
  }
};

const RelabelingTable& TableFor(int n) {
  static std::array<std::once_flag, kMaxCanonicalVertices + 1> flags;
  static std::array<std::unique_ptr<RelabelingTable>, kMaxCanonicalVertices + 1>
      tables;
  std::call_once(flags[n], [n] {
    tables[n] = std::make_unique<RelabelingTable>(n);
  });
  return *tables[n];
}

bool Extend(const Tournament& a, const Tournament& b, std::vector<int>& map,
            std::vector<bool>& used, const std::vector<int>& out_a,
            const std::vector<int>& out_b, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c] || out_a[next] != out_b[c]) continue;
    bool consistent = true;
    for (int p = 0; p < next && consistent; ++p) {
      consistent = a.Beats(p, next) == b.Beats(map[p], c);
    }
    if (!consistent) continue;
    map[next] = c;
    used[c] = true;
    if (Extend(a, b, map, used, out_a, out_b, next + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

uint64_t CanonicalPacked(int n, uint64_t packed, std::vector<int>* witness) {
  const RelabelingTable& table = TableFor(n);
  const int m = table.m;
  // Row 0 is the identity relabeling.
  uint64_t best = packed;
  int best_index = 0;
  for (int k = 1; k < table.count; ++k) {
    const uint8_t* shift = &table.shift[k * m];
    const uint8_t* flip = &table.flip[k * m];
    uint64_t image = 0;
    int q = 0;
    uint64_t bit = 0;
    uint64_t best_bit = 0;
    for (; q < m; ++q) {
      bit = ((packed >> shift[q]) & 1u) ^ flip[q];
      best_bit = (best >> (m - 1 - q)) & 1u;
      if (bit != best_bit) break;
      image |= bit << (m - 1 - q);
    }
    if (q == m || bit > best_bit) continue;
    for (++q; q < m; ++q) {
      image |= (((packed >> shift[q]) & 1u) ^ flip[q]) << (m - 1 - q);
    }
    best = image;
    best_index = k;
  }
  if (witness != nullptr) *witness = table.Witness(best_index);
  return best;
}

bool IsCanonicalPacked(int n, uint64_t packed) {
  const RelabelingTable& table = TableFor(n);
  const int m = table.m;
  for (int k = 1; k < table.count; ++k) {
    const uint8_t* shift = &table.shift[k * m];
    const uint8_t* flip = &table.flip[k * m];
    for (int q = 0; q < m; ++q) {
      const uint64_t bit = ((packed >> shift[q]) & 1u) ^ flip[q];
      const uint64_t own = (packed >> (m - 1 - q)) & 1u;
      if (bit == own) continue;
      if (bit < own) return false;
      break;
    }
  }
  return true;
}

absl::StatusOr<CanonicalForm> ComputeCanonicalForm(const Tournament& t) {
  const int n = t.size();
  if (n > kMaxCanonicalVertices) {
    return absl::OutOfRangeError(
        absl::StrCat("canonical form supports n <= ", kMaxCanonicalVertices,
                     ", got n = ", n));
  }
  CanonicalForm form;
  const uint64_t best = CanonicalPacked(n, PackCode(t), &form.witness);
  form.code = PairCode{n, PackedToBits(n, best)};
  return form;
}

bool Isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> out_a(n), out_b(n);
  for (int i = 0; i < n; ++i) {
    out_a[i] = std::popcount(a.OutMask(i));
    out_b[i] = std::popcount(b.OutMask(i));
  }
  std::vector<int> sorted_a = out_a, sorted_b = out_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return Extend(a, b, map, used, out_a, out_b, 0);
}

}  // namespace rpsgraph
