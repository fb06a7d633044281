// Copyright 2026 The TPASS Toolkit Authors
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

// Game files are UTF-8 JSON objects discriminated by "kind":
//
//   {"kind": "tpass",    "A": [[...], ...], "pi": [...], "rho": [...]}
//   {"kind": "bimatrix", "B": [[...], ...], "C": [[...], ...]}
//
// Every number may be a JSON number, a decimal string ("0.75"), or an exact
// fraction string ("3/4", integer numerator and non-zero integer
// denominator). Parsing never consults the C locale.

#ifndef TPASS_GAME_FILE_H_
#define TPASS_GAME_FILE_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tpass/decompose.h"
#include "tpass/game.h"

namespace tpass {

using GameFile = std::variant<TpassGame, BimatrixGame>;

// Throws InputError naming the offending field.
GameFile ParseGameFile(std::string_view text);

// Throws InputError if the file cannot be read or parsed.
GameFile LoadGameFile(const std::string& path);

std::string SerializeGame(const TpassGame& game);
std::string SerializeGame(const BimatrixGame& game);

// A single decimal or "num/den" literal.
double ParseScalar(std::string_view text);

// Comma-separated scalars, e.g. "1/2,0.5".
std::vector<double> ParseScalarList(std::string_view text);

}  // namespace tpass

#endif  // TPASS_GAME_FILE_H_
