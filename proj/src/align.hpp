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

// Minimum edit-distance alignment of token sequences and attribution of
// the resulting edit operations to token types.

#ifndef LYREVAL_ALIGN_HPP_
#define LYREVAL_ALIGN_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "textnorm.hpp"

namespace lyreval::align {

using textnorm::TokenSequence;
using textnorm::TokenType;

enum class EditKind { kHit, kSubstitution, kDeletion, kInsertion };

struct EditOp {
  EditKind kind = EditKind::kHit;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
  std::vector<EditOp> ops;
  std::size_t cost = 0;

  friend bool operator==(const EditScript&, const EditScript&) = default;
};

struct TypeCounts {
  std::size_t hits = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;

  TypeCounts& operator+=(const TypeCounts& other);
  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

struct EditCounts {
  std::array<TypeCounts, textnorm::kNumTokenTypes> by_type{};

  TypeCounts& operator[](TokenType t) {
    return by_type[static_cast<std::size_t>(t)];
  }
  const TypeCounts& operator[](TokenType t) const {
    return by_type[static_cast<std::size_t>(t)];
  }

  // Sum of H+S+D over all types (reference length) and H+S+I (hypothesis).
  std::size_t reference_total() const;
  std::size_t hypothesis_total() const;

  EditCounts& operator+=(const EditCounts& other);
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

// Hit equality: same type and same matched (lowercased) form.
bool tokens_match(const textnorm::Token& a, const textnorm::Token& b);

// Unit-cost Levenshtein alignment. On cost ties the backtrace prefers the
// diagonal step, then deletion, then insertion.
EditScript align(const TokenSequence& ref, const TokenSequence& hyp);

// A substitution across types counts as a deletion of the reference type
// plus an insertion of the hypothesis type. Throws Error(kInvalidArgument)
// if the script does not tile both sequences.
EditCounts attribute(const EditScript& script, const TokenSequence& ref,
                     const TokenSequence& hyp);

}  // namespace lyreval::align

#endif  // LYREVAL_ALIGN_HPP_
