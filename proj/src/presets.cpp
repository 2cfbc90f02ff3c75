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

#include "gmcq/presets.hpp"

#include <tuple>

namespace gmcq::presets {
namespace {

using Cfg = std::tuple<long, long, long, long, long, long>;  // q, λ, τ, ρ, σ, n_Y

PresetRow row(Cfg c, long n, long k, long d, bool beats, std::string comment = {}) {
  const auto [q, lambda, tau, rho, sigma, ny] = c;
  return PresetRow{CodeConfig{q, lambda, tau, rho, sigma, ny, d}, n, k, beats, std::move(comment)};
}

constexpr bool Y = true;
constexpr bool N = false;

Preset table2() {
  const Cfg c{8, 7, 3, 9, 2, 2};
  const char* matches = "Matches codetables.de";
  return {"table2",
          {row(c, 84, 82, 2, Y, matches), row(c, 84, 78, 3, N, matches), row(c, 84, 76, 4, Y, matches),
           row(c, 84, 72, 5, Y, matches), row(c, 84, 70, 6, Y, matches),
           row(c, 84, 66, 7, Y, "Beats [[84,66,6]]_8 from codetables.de"),
           row(c, 84, 64, 8, Y, "Beats [[84,64,7]]_8 from codetables.de"),
           row(c, 84, 60, 9, Y, "Beats [[84,60,8]]_8 from codetables.de"),
           row(c, 84, 58, 10, Y, "Beats [[84,58,8]]_8 from codetables.de")}};
}

Preset table3() {
  const Cfg c{11, 5, 6, 12, 2, 3};
  return {"table3",
          {row(c, 180, 178, 2, Y, "MDS"), row(c, 180, 174, 3, Y, "Singleton defect is 2"),
           row(c, 180, 166, 5, N, "Beats [[180,164,5]]_11 [barbero24]"), row(c, 180, 164, 6, Y, "Best known")}};
}

Preset table4() {
  const Cfg c{7, 3, 4, 8, 2, 3};
  const char* matches = "Matches codetables.de";
  return {"table4",
          {row(c, 72, 70, 2, Y, matches), row(c, 72, 66, 3, Y, matches), row(c, 72, 62, 4, N, matches),
           row(c, 72, 58, 5, N, matches), row(c, 72, 56, 6, Y, matches)}};
}

Preset tableq8() {
  const Cfg a{8, 7, 3, 9, 3, 2};
  const Cfg b{8, 7, 3, 9, 3, 3};
  auto edel = [](const char* code) { return std::string("Beats ") + code + " in yvesedel.de"; };
  return {"tableq8",
          {row(a, 126, 124, 2, Y, edel("[[127,113,3]]_8")), row(a, 126, 120, 3, Y, edel("[[127,113,3]]_8")),
           row(a, 126, 118, 4, Y, edel("[[127,113,3]]_8")), row(a, 126, 114, 5, Y, edel("[[127,106,5]]_8")),
           row(a, 126, 112, 6, Y, edel("[[127,106,5]]_8")), row(a, 126, 108, 7, Y, edel("[[128,98,7]]_8")),
           row(a, 126, 106, 8, Y, edel("[[127,106,5]]_8")), row(a, 126, 102, 9, Y, edel("[[127,106,5]]_8")),
           row(a, 126, 100, 10, Y, edel("[[127,78,10]]_8")),
           row(b, 189, 187, 2, Y, edel("[[189,177,3]]_8")), row(b, 189, 183, 3, Y, edel("[[189,177,3]]_8")),
           row(b, 189, 179, 4, Y, edel("[[189,175,4]]_8")), row(b, 189, 175, 5, Y, edel("[[189,171,5]]_8")),
           row(b, 189, 173, 6, Y, edel("[[189,171,5]]_8")), row(b, 189, 167, 7, N, edel("[[189,161,7]]_8")),
           row(b, 189, 165, 8, Y, edel("[[189,157,7]]_8")), row(b, 189, 161, 9, Y, edel("[[189,151,9]]_8")),
           row(b, 189, 157, 10, Y, edel("[[189,157,7]]_8")), row(b, 189, 153, 11, N, edel("[[189,145,9]]_8")),
           row(b, 189, 151, 12, Y, edel("[[189,137,12]]_8"))}};
}

Preset comparisons() {
  return {"comparisons",
          {row({7, 3, 4, 8, 2, 3}, 72, 58, 5, N, "Beats [[72,56,5]]_7 [barbero24]"),
           row({7, 3, 2, 8, 4, 3}, 72, 56, 6, Y, "Beats [[72,56,5]]_7 [barbero24]"),
           row({7, 3, 2, 8, 3, 3}, 54, 52, 2, Y, "Matches codetables.de, beats [[55,51,2]]_7 [Tian2024]"),
           row({7, 3, 4, 8, 2, 4}, 96, 90, 3, Y, "Beats [[98,82,3]]_7 [Tian2024]"),
           row({7, 3, 4, 8, 2, 4}, 96, 86, 4, Y, "Beats [[98,82,3]]_7 [Tian2024]"),
           row({7, 3, 2, 8, 3, 6}, 108, 102, 3, Y, "Beats [[116,100,3]]_7 [Tian2024]"),
           row({11, 5, 4, 3, 3, 3}, 180, 166, 5, N, "Beats [[180,164,5]]_11 [barbero24]"),
           row({13, 3, 2, 7, 4, 2}, 48, 42, 3, N, "Beats [[52,42,3]]_13 [Zhang2023]"),
           row({23, 11, 2, 4, 2, 2}, 88, 82, 3, N, "Beats [[92,82,3]]_23 [Zhang2023]")}};
}

Preset table5() {
  const Cfg c{32, 31, 11, 33, 3, 2};
  // k column as published for d = 2..42.
  static constexpr long kPublished[] = {2044, 2040, 2038, 2034, 2032, 2028, 2026, 2022, 2020, 2016, 2014,
                                        2010, 2008, 2004, 2002, 1998, 1996, 1992, 1990, 1986, 1984, 1980,
                                        1978, 1974, 1972, 1968, 1966, 1962, 1960, 1956, 1954, 1950, 1948,
                                        1944, 1942, 1938, 1936, 1932, 1930, 1926, 1924};
  Preset p{"table5", {}};
  long d = 2;
  for (long k : kPublished) p.rows.push_back(row(c, 2046, k, d++, Y));
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"table2", "table3", "table4", "table5", "tableq8", "comparisons"};
  return names;
}

std::optional<Preset> preset(std::string_view name) {
  if (name == "table2") return table2();
  if (name == "table3") return table3();
  if (name == "table4") return table4();
  if (name == "table5") return table5();
  if (name == "tableq8") return tableq8();
  if (name == "comparisons") return comparisons();
  return std::nullopt;
}

}  // namespace gmcq::presets
