// Copyright 2026 The lyreval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "align.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "error.hpp"

namespace lyreval::align {

namespace {

// Interns (type, matched) pairs so the DP inner loop compares integers.
class SymbolTable {
 public:
  std::vector<uint32_t> encode(const TokenSequence& seq) {
    std::vector<uint32_t> ids;
    ids.reserve(seq.size());
    for (const auto& t : seq.tokens) {
      auto [it, inserted] = ids_.try_emplace(
          std::make_pair(t.type, t.matched), static_cast<uint32_t>(ids_.size()));
      ids.push_back(it->second);
    }
    return ids;
  }

 private:
  std::map<std::pair<TokenType, std::string>, uint32_t> ids_;
};

[[noreturn]] void bad_script(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "edit script does not tile sequences: " + what);
}

}  // namespace

TypeCounts& TypeCounts::operator+=(const TypeCounts& other) {
  hits += other.hits;
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  return *this;
}

std::size_t EditCounts::reference_total() const {
  std::size_t n = 0;
  for (const auto& c : by_type) n += c.hits + c.substitutions + c.deletions;
  return n;
}

std::size_t EditCounts::hypothesis_total() const {
  std::size_t n = 0;
  for (const auto& c : by_type) n += c.hits + c.substitutions + c.insertions;
  return n;
}

EditCounts& EditCounts::operator+=(const EditCounts& other) {
  for (std::size_t i = 0; i < by_type.size(); ++i) by_type[i] += other.by_type[i];
  return *this;
}

bool tokens_match(const textnorm::Token& a, const textnorm::Token& b) {
  return a.type == b.type && a.matched == b.matched;
}

EditScript align(const TokenSequence& ref, const TokenSequence& hyp) {
  SymbolTable symbols;
  const std::vector<uint32_t> r = symbols.encode(ref);
  const std::vector<uint32_t> h = symbols.encode(hyp);
  const std::size_t n = r.size();
  const std::size_t m = h.size();
  const std::size_t width = m + 1;

  // cost[i * width + j]: distance between r[0..i) and h[0..j).
  std::vector<uint32_t> cost((n + 1) * width);
  for (std::size_t j = 0; j <= m; ++j) cost[j] = static_cast<uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    uint32_t* row = &cost[i * width];
    const uint32_t* prev = &cost[(i - 1) * width];
    row[0] = static_cast<uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const uint32_t diag = prev[j - 1] + (r[i - 1] == h[j - 1] ? 0u : 1u);
      row[j] = std::min({diag, prev[j] + 1, row[j - 1] + 1});
    }
  }

  EditScript script;
  script.cost = cost[n * width + m];
  script.ops.reserve(std::max(n, m));
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const uint32_t here = cost[i * width + j];
    if (i > 0 && j > 0) {
      const bool same = r[i - 1] == h[j - 1];
      if (here == cost[(i - 1) * width + (j - 1)] + (same ? 0u : 1u)) {
        script.ops.push_back(
            {same ? EditKind::kHit : EditKind::kSubstitution, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == cost[(i - 1) * width + j] + 1) {
      script.ops.push_back({EditKind::kDeletion, i - 1, std::nullopt});
      --i;
    } else {
      script.ops.push_back({EditKind::kInsertion, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

EditCounts attribute(const EditScript& script, const TokenSequence& ref,
                     const TokenSequence& hyp) {
  EditCounts counts;
  std::size_t next_ref = 0;
  std::size_t next_hyp = 0;

  auto take_ref = [&](const EditOp& op) -> const textnorm::Token& {
    if (!op.ref_index || *op.ref_index != next_ref || next_ref >= ref.size()) {
      bad_script("reference index out of order at position " + std::to_string(next_ref));
    }
    return ref[next_ref++];
  };
  auto take_hyp = [&](const EditOp& op) -> const textnorm::Token& {
    if (!op.hyp_index || *op.hyp_index != next_hyp || next_hyp >= hyp.size()) {
      bad_script("hypothesis index out of order at position " + std::to_string(next_hyp));
    }
    return hyp[next_hyp++];
  };

  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditKind::kHit: {
        const auto& r = take_ref(op);
        const auto& h = take_hyp(op);
        if (!tokens_match(r, h)) bad_script("hit between unequal tokens");
        ++counts[r.type].hits;
        break;
      }
      case EditKind::kSubstitution: {
        const auto& r = take_ref(op);
        const auto& h = take_hyp(op);
        if (r.type == h.type) {
          ++counts[r.type].substitutions;
        } else {
          ++counts[r.type].deletions;
          ++counts[h.type].insertions;
        }
        break;
      }
      case EditKind::kDeletion:
        if (op.hyp_index) bad_script("deletion carries a hypothesis index");
        ++counts[take_ref(op).type].deletions;
        break;
      case EditKind::kInsertion:
        if (op.ref_index) bad_script("insertion carries a reference index");
        ++counts[take_hyp(op).type].insertions;
        break;
    }
  }
  if (next_ref != ref.size() || next_hyp != hyp.size()) {
    bad_script("script ends before the sequences do");
  }
  return counts;
}

}  // namespace lyreval::align
