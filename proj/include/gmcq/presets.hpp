// Copyright 2026 The gmcq Authors
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

#ifndef GMCQ_PRESETS_HPP
#define GMCQ_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmcq/params.hpp"

/// Published parameter tables, pinned row by row.
namespace gmcq::presets {

struct PresetRow {
  CodeConfig config;  ///< config.t is the row's distance
  long n = 0;
  long k = 0;
  bool beats_qgv = false;
  /// Literature comparison, reproduced as published and not recomputed.
  std::string comment;
};

struct Preset {
  std::string name;
  std::vector<PresetRow> rows;
};

/// table2, table3, table4, table5, tableq8, comparisons.
const std::vector<std::string>& preset_names();

std::optional<Preset> preset(std::string_view name);

}  // namespace gmcq::presets

#endif  // GMCQ_PRESETS_HPP
