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

#ifndef SDNPOLICY_ADDRESSES_H_
#define SDNPOLICY_ADDRESSES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sdnpolicy {

// 48-bit Ethernet hardware address, stored in the low bits of a uint64_t.
class MacAddress {
 public:
  static constexpr uint64_t kMask = (uint64_t{1} << 48) - 1;

  constexpr MacAddress() = default;
  constexpr explicit MacAddress(uint64_t bits) : bits_(bits & kMask) {}

  // Accepts colon-hex notation, e.g. "00:1b:44:11:3a:b7".
  static std::optional<MacAddress> Parse(std::string_view text);

  constexpr uint64_t bits() const { return bits_; }
  std::string ToString() const;

  friend constexpr auto operator<=>(MacAddress, MacAddress) = default;

 private:
  uint64_t bits_ = 0;
};

class Ipv4Address {
 public:
  constexpr Ipv4Address() = default;
  constexpr explicit Ipv4Address(uint32_t bits) : bits_(bits) {}

  // Accepts dotted-quad notation only, each octet 0..255, no leading '+'.
  static std::optional<Ipv4Address> Parse(std::string_view text);

  constexpr uint32_t bits() const { return bits_; }
  std::string ToString() const;

  friend constexpr auto operator<=>(Ipv4Address, Ipv4Address) = default;

 private:
  uint32_t bits_ = 0;
};

inline constexpr uint16_t kMaxVlanId = 4095;

}  // namespace sdnpolicy

#endif  // SDNPOLICY_ADDRESSES_H_
