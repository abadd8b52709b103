// Copyright 2026 The Topomap Authors
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

#ifndef TOPOMAP_IO_H
#define TOPOMAP_IO_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topomap/finite_function.h"

namespace topomap {

/// Function table file contents (JSON):
///
///   {"domain": ["-1", "0", "1"], "codomain": ["0", "1"], "map": [1, 0, 1]}
///
/// Two-argument tables add "arity": 2; "domain" then lists the argument grid
/// and "map" holds n*n entries, first argument major.
struct FunctionTable {
  std::size_t arity = 1;
  std::vector<std::string> domain;
  std::vector<std::string> codomain;
  std::vector<std::size_t> map;
};

FunctionTable parse_function_table(std::string_view json_text);
FunctionTable read_function_table(const std::string& path);
std::string function_table_json(const FunctionTable& table, bool pretty = true);

FunctionTable to_table(const FiniteFunction& f);
FunctionTable to_table(const BinaryFunction& f);
/// Two-argument tables are flattened onto argument pairs.
FiniteFunction as_unary(const FunctionTable& table);
BinaryFunction as_binary(const FunctionTable& table);

/// Set file: {"space": [labels], "members": [labels]}.
struct SetFile {
  std::vector<std::string> space;
  std::vector<std::string> members;
};

SetFile parse_set_file(std::string_view json_text);
SetFile read_set_file(const std::string& path);
std::string set_file_json(const SetFile& set, bool pretty = true);

/// Ordinals of `members` within `space`; unknown labels throw BasisError.
std::vector<std::size_t> member_ordinals(const std::vector<std::string>& space,
                                         const std::vector<std::string>& members);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace topomap

#endif  // TOPOMAP_IO_H
