// Copyright 2026 The Acroforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACROFORGE_STEMMER_HPP_
#define ACROFORGE_STEMMER_HPP_

#include <string>
#include <string_view>

namespace acroforge {

// The original Porter (1980) suffix-stripping stemmer. Input is expected to
// be a lowercase ASCII word; words of length <= 2 and words containing
// non-letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace acroforge

#endif  // ACROFORGE_STEMMER_HPP_
