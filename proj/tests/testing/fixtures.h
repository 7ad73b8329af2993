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

// Hand-built models and brute-force reference procedures shared by the test
// suites. Nothing here calls into the code paths it is used to check.

#ifndef SDNPOLICY_TESTS_TESTING_FIXTURES_H_
#define SDNPOLICY_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sdnpolicy/policy.h"
#include "sdnpolicy/system_model.h"

namespace sdnpolicy::testing {

// Terminal with MAC 02:00:00:00:00:<n> and IP 10.0.0.<n>.
Terminal MakeTerminal(const std::string& id, int n, const std::string& sw,
                      PortNo port);

// Switch "s<i>" with dpid i and ports 1..n_ports, empty table.
Switch MakeSwitch(int i, int n_ports);

Link MakeLink(const std::string& a, PortNo pa, const std::string& b, PortNo pb,
              double cost = 1);

// s1 -- s2: t1@s1:1, t3@s2:2, link s1:2 -- s2:1.
ModelSpec TwoSwitchSpec();

// s1 -- s2 -- s3, unit costs: s1:2--s2:1, s2:2--s3:1; t1@s1:1, t3@s3:2.
ModelSpec LineSpec();

// Header from terminal `src` to terminal `dst`.
PacketHeader HeaderBetween(const SdnSystemModel& model, const std::string& src,
                           const std::string& dst, uint8_t proto = 6,
                           uint16_t port = 80);

// Exhaustive minimum over all simple paths between two switches (DFS).
// nullopt when unreachable.
std::optional<double> BruteForceMinCost(const ModelSpec& spec,
                                        const std::string& src,
                                        const std::string& dst);

// Registry with the common services HTTP(6/80), HTTPS(6/443), SSH(6/22) and
// DNS(17/53).
BindingRegistry StandardServices();

std::string ModelSpecToJson(const ModelSpec& spec,
                            const BindingRegistry* registry = nullptr);
std::string RegistryToJson(const BindingRegistry& registry);
std::string PoliciesToJson(const std::vector<SecurityPolicy>& policies);

// Fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string& prefix);
void WriteText(const std::filesystem::path& path, const std::string& text);
std::string ReadText(const std::filesystem::path& path);

}  // namespace sdnpolicy::testing

#endif  // SDNPOLICY_TESTS_TESTING_FIXTURES_H_
