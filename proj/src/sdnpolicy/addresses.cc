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

#include "sdnpolicy/addresses.h"

#include <charconv>
#include <cstdio>

namespace sdnpolicy {
namespace {

std::optional<unsigned> ParseUnsigned(std::string_view text, int base,
                                      size_t max_digits) {
  if (text.empty() || text.size() > max_digits) return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::optional<MacAddress> MacAddress::Parse(std::string_view text) {
  uint64_t bits = 0;
  int octets = 0;
  while (true) {
    size_t colon = text.find(':');
    std::string_view part = text.substr(0, colon);
    std::optional<unsigned> octet = ParseUnsigned(part, 16, 2);
    if (!octet.has_value()) return std::nullopt;
    bits = (bits << 8) | *octet;
    ++octets;
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  if (octets != 6) return std::nullopt;
  return MacAddress(bits);
}

std::string MacAddress::ToString() const {
  char buf[18];
  std::snprintf(buf, sizeof(buf), "%02x:%02x:%02x:%02x:%02x:%02x",
                static_cast<unsigned>((bits_ >> 40) & 0xff),
                static_cast<unsigned>((bits_ >> 32) & 0xff),
                static_cast<unsigned>((bits_ >> 24) & 0xff),
                static_cast<unsigned>((bits_ >> 16) & 0xff),
                static_cast<unsigned>((bits_ >> 8) & 0xff),
                static_cast<unsigned>(bits_ & 0xff));
  return buf;
}

std::optional<Ipv4Address> Ipv4Address::Parse(std::string_view text) {
  uint32_t bits = 0;
  int octets = 0;
  while (true) {
    size_t dot = text.find('.');
    std::optional<unsigned> octet = ParseUnsigned(text.substr(0, dot), 10, 3);
    if (!octet.has_value() || *octet > 255) return std::nullopt;
    bits = (bits << 8) | *octet;
    ++octets;
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
  }
  if (octets != 4) return std::nullopt;
  return Ipv4Address(bits);
}

std::string Ipv4Address::ToString() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (bits_ >> 24) & 0xff,
                (bits_ >> 16) & 0xff, (bits_ >> 8) & 0xff, bits_ & 0xff);
  return buf;
}

}  // namespace sdnpolicy
