// Copyright 2026 The sdnpolicy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Helpers for reading and writing the JSON documents the library exchanges.
// Schema errors are reported as kSyntax with a JSON-pointer location.

#ifndef SDNPOLICY_JSON_IO_H_
#define SDNPOLICY_JSON_IO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sdnpolicy/system_model.h"

namespace sdnpolicy::json_io {

using Json = nlohmann::json;

// Parses `text`; malformed input throws kSyntax naming line and column.
Json Parse(std::string_view text);

// Pretty-printed with sorted keys and a trailing newline. Byte-stable.
std::string Dump(const Json& doc);

[[noreturn]] void SchemaError(const std::string& path, std::string_view what);

const Json& Field(const Json& obj, std::string_view key,
                  const std::string& path);
// nullptr when the key is absent or null.
const Json* OptionalField(const Json& obj, std::string_view key,
                          const std::string& path);
void ExpectObject(const Json& value, const std::string& path);
void ExpectArray(const Json& value, const std::string& path);
std::string GetString(const Json& value, const std::string& path);
uint64_t GetUnsigned(const Json& value, const std::string& path,
                     uint64_t max_value);
double GetNumber(const Json& value, const std::string& path);
MacAddress GetMac(const Json& value, const std::string& path);
Ipv4Address GetIpv4(const Json& value, const std::string& path);

Json MatchToJson(const Match& match);
Match MatchFromJson(const Json& value, const std::string& path);
Json ActionToJson(const Action& action);
Action ActionFromJson(const Json& value, const std::string& path);
Json RuleToJson(const FlowRule& rule);
FlowRule RuleFromJson(const Json& value, const std::string& path);

}  // namespace sdnpolicy::json_io

#endif  // SDNPOLICY_JSON_IO_H_
