// Copyright 2026 The risbench Authors
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

#pragma once

#include <string_view>

#include "ris/sweep.hpp"

namespace ris {

/// Thrown for a source string that is neither a valid builder spec nor a
/// readable grid file.
class BadPatternSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Builder mini-language for command-line pattern sources:
///
///   uniform:on | uniform:off
///   stripes:v:<band_width>[:on|:off]   vertical bands, first band state
///   stripes:h:<band_width>[:on|:off]   horizontal bands
///   checker:<block>
///   random:<seed> | random             (bare form uses default_seed)
///
/// Anything else is read as the path of a 16-line grid file; the pattern id
/// is then the file stem. For builder specs the id is the spec itself.
NamedPattern parse_pattern_source(std::string_view source,
                                  std::uint64_t default_seed = 0);

}  // namespace ris
