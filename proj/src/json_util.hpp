// Copyright 2023 The Authors.
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

#ifndef POSLAB_SRC_JSON_UTIL_HPP_
#define POSLAB_SRC_JSON_UTIL_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "poslab/errors.hpp"

namespace poslab::json_util {

// Converts a byte offset into a 1-based line/column pair.
inline void locate(const std::string& text, std::size_t byte, int& line,
                   int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

inline nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line, column;
    locate(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError("invalid JSON", line, column);
  }
}

inline int get_int(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"", 1,
                     1);
  return j[key].get<int>();
}

inline std::vector<int> int_array(const nlohmann::json& a, const char* what) {
  if (!a.is_array())
    throw ParseError(std::string("\"") + what + "\" must be an array", 1, 1);
  std::vector<int> out;
  for (const auto& v : a) {
    if (!v.is_number_integer())
      throw ParseError(std::string("\"") + what + "\" must hold integers", 1,
                       1);
    out.push_back(v.get<int>());
  }
  return out;
}

inline std::vector<int> get_int_array(const nlohmann::json& j,
                                      const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing array field \"") + key + "\"", 1, 1);
  return int_array(j[key], key);
}

}  // namespace poslab::json_util

#endif  // POSLAB_SRC_JSON_UTIL_HPP_
