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

#include "topomap/io.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "topomap/errors.h"

namespace topomap {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (e.is_string()) out.push_back(e.get<std::string>());
    else if (e.is_number()) out.push_back(e.dump());
    else throw ParseError(std::string("\"") + key + "\" entries must be labels");
  }
  return out;
}

}  // namespace

FunctionTable parse_function_table(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("function table must be a JSON object");
  FunctionTable t;
  if (j.contains("arity")) {
    const json& a = j.at("arity");
    if (!a.is_number_unsigned() || (a.get<std::size_t>() != 1 && a.get<std::size_t>() != 2)) {
      throw ParseError("\"arity\" must be 1 or 2");
    }
    t.arity = a.get<std::size_t>();
  }
  t.domain = string_list(j, "domain");
  t.codomain = string_list(j, "codomain");
  if (!j.contains("map") || !j.at("map").is_array()) {
    throw ParseError("missing array field \"map\"");
  }
  for (const auto& e : j.at("map")) {
    if (!e.is_number_unsigned()) {
      throw ParseError("\"map\" entries must be nonnegative codomain indices");
    }
    t.map.push_back(e.get<std::size_t>());
  }
  const std::size_t expected =
      t.arity == 2 ? t.domain.size() * t.domain.size() : t.domain.size();
  if (t.map.size() != expected) {
    throw ParseError("\"map\" has " + std::to_string(t.map.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  return t;
}

FunctionTable read_function_table(const std::string& path) {
  return parse_function_table(read_text_file(path));
}

std::string function_table_json(const FunctionTable& table, bool pretty) {
  nlohmann::ordered_json j;
  if (table.arity != 1) j["arity"] = table.arity;
  j["domain"] = table.domain;
  j["codomain"] = table.codomain;
  j["map"] = table.map;
  return j.dump(pretty ? 2 : -1) + (pretty ? "\n" : "");
}

FunctionTable to_table(const FiniteFunction& f) {
  return {1, f.domain_labels(), f.codomain_labels(), f.mapping()};
}

FunctionTable to_table(const BinaryFunction& f) {
  return {2, f.argument_labels(), f.codomain_labels(), f.table()};
}

FiniteFunction as_unary(const FunctionTable& table) {
  if (table.arity == 2) return as_binary(table).flatten();
  return FiniteFunction(table.domain, table.codomain, table.map);
}

BinaryFunction as_binary(const FunctionTable& table) {
  if (table.arity != 2) {
    throw PreconditionError("function table is not a two-argument table");
  }
  return BinaryFunction(table.domain, table.codomain, table.map);
}

SetFile parse_set_file(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("set file must be a JSON object");
  return {string_list(j, "space"), string_list(j, "members")};
}

SetFile read_set_file(const std::string& path) {
  return parse_set_file(read_text_file(path));
}

std::string set_file_json(const SetFile& set, bool pretty) {
  nlohmann::ordered_json j;
  j["space"] = set.space;
  j["members"] = set.members;
  return j.dump(pretty ? 2 : -1) + (pretty ? "\n" : "");
}

std::vector<std::size_t> member_ordinals(const std::vector<std::string>& space,
                                         const std::vector<std::string>& members) {
  std::vector<std::size_t> out;
  for (const auto& m : members) {
    std::size_t i = 0;
    while (i < space.size() && space[i] != m) ++i;
    if (i == space.size()) throw BasisError("label '" + m + "' is not in the space");
    out.push_back(i);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace topomap
