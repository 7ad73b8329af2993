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

#include "sdnpolicy/pipeline.h"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "sdnpolicy/json_io.h"
#include "sdnpolicy/transform.h"
#include "testing/fixtures.h"
#include "testing/instance_generator.h"

namespace sdnpolicy {
namespace {

namespace fs = std::filesystem;
using ::sdnpolicy::testing::MakeTempDir;
using ::sdnpolicy::testing::ReadText;
using ::sdnpolicy::testing::WriteText;

const fs::path kExamples = SDNP_EXAMPLES_DIR;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = MakeTempDir("sdnp-pipeline");
    config_.model_path = kExamples / "campus.model.json";
    config_.policy_path = kExamples / "campus.policies.json";
    config_.out_dir = dir_ / "out";
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Transform() { return CmdTransform(config_, out_, err_); }
  int Verify() { return CmdVerify(config_, out_, err_); }

  fs::path dir_;
  RunConfig config_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(PipelineTest, TransformMatchesGoldenFtm) {
  ASSERT_EQ(Transform(), kExitOk) << err_.str();
  fs::path out = config_.out_dir;
  EXPECT_EQ(ReadText(out / kFtmMachineFile),
            ReadText(kExamples / "campus.ftm.machine"));
  EXPECT_TRUE(fs::exists(out / kFtmHumanFile));
  EXPECT_TRUE(fs::exists(out / kReportMachineFile));
  EXPECT_NE(ReadText(out / kReportMachineFile).find("\"conflicts\": []"),
            std::string::npos);
}

TEST_F(PipelineTest, FormatSelectsFiles) {
  config_.format = OutputFormat::kHuman;
  ASSERT_EQ(Transform(), kExitOk) << err_.str();
  EXPECT_FALSE(fs::exists(fs::path(config_.out_dir) / kFtmMachineFile));
  EXPECT_TRUE(fs::exists(fs::path(config_.out_dir) / kFtmHumanFile));
}

TEST_F(PipelineTest, MalformedPolicyFileNamesFileAndLocation) {
  fs::path bad = dir_ / "bad.json";
  WriteText(bad, "{\n  \"policies\": [\n    {\"id\": \"p1\",,}\n  ]\n}\n");
  config_.policy_path = bad;
  EXPECT_EQ(Transform(), kExitInputError);
  std::string err = err_.str();
  EXPECT_NE(err.find("bad.json"), std::string::npos) << err;
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
}

TEST_F(PipelineTest, LeakIsAnInputError) {
  config_.policy_path = kExamples / "leaky.policies.json";
  EXPECT_EQ(Transform(), kExitInputError);
  EXPECT_NE(err_.str().find("UnderlyingLeak"), std::string::npos) << err_.str();
}

TEST_F(PipelineTest, MissingFileIsAnInputError) {
  config_.model_path = dir_ / "nope.json";
  EXPECT_EQ(Verify(), kExitInputError);
  EXPECT_NE(err_.str().find("nope.json"), std::string::npos);
}

TEST_F(PipelineTest, SeparateRegistryFile) {
  std::string model = ReadText(kExamples / "campus.model.json");
  json_io::Json doc = json_io::Parse(model);
  fs::path registry = dir_ / "registry.json";
  WriteText(registry, json_io::Dump(doc["registry"]));
  doc.erase("registry");
  fs::path bare = dir_ / "bare.json";
  WriteText(bare, json_io::Dump(doc));
  config_.model_path = bare;
  EXPECT_EQ(Verify(), kExitInputError);  // no registry anywhere
  config_.registry_path = registry;
  err_.str("");
  EXPECT_EQ(Verify(), kExitOk) << err_.str();
}

TEST_F(PipelineTest, VerifyCleanInputsHold) {
  config_.with_oracle = true;
  ASSERT_EQ(Verify(), kExitOk) << err_.str();
  std::string report = ReadText(fs::path(config_.out_dir) / kReportMachineFile);
  EXPECT_NE(report.find("\"status\": \"AllHold\""), std::string::npos);
}

TEST_F(PipelineTest, ConflictingPoliciesFailVerification) {
  config_.policy_path = kExamples / "conflicting.policies.json";
  EXPECT_EQ(Verify(), kExitPropertyFailure);
  std::string report = ReadText(fs::path(config_.out_dir) / kReportMachineFile);
  EXPECT_NE(report.find("\"conflicts_with\""), std::string::npos) << report;
}

TEST_F(PipelineTest, TamperedFtmOverrideIsCaught) {
  ASSERT_EQ(Transform(), kExitOk);
  FlowTableDelta delta =
      ParseFtm(ReadText(fs::path(config_.out_dir) / kFtmMachineFile));
  // Remove the Students -> Database drop rules on the student switch.
  std::vector<FlowRule>& s3 = delta.rules.at("s3");
  std::erase_if(s3, [](const FlowRule& r) { return r.provenance == "p4"; });
  // And let everything for the database through the core and the rack.
  Match to_db{.ip_dst = Ipv4Address::Parse("10.0.3.20")};
  delta.rules["s3"].push_back({to_db, 1500, Action::Forward(1), "tamper"});
  delta.rules["s1"].push_back({to_db, 1500, Action::Forward(1), "tamper"});
  delta.rules["s2"].push_back({to_db, 1500, Action::Forward(3), "tamper"});
  for (auto& [sw, rules] : delta.rules) {
    std::sort(rules.begin(), rules.end(), LookupPrecedes);
  }
  fs::path tampered = dir_ / "tampered.machine";
  WriteText(tampered, ExportFtm(delta, FtmFormat::kMachine));

  config_.ftm_path = tampered;
  config_.out_dir = dir_ / "verify";
  EXPECT_EQ(Verify(), kExitPropertyFailure) << err_.str();
  std::string report = ReadText(fs::path(config_.out_dir) / kReportMachineFile);
  EXPECT_NE(report.find("\"counterexample\""), std::string::npos);
}

TEST_F(PipelineTest, OracleCapExceededIsInconclusive) {
  config_.with_oracle = true;
  config_.enum_cap = 1;
  EXPECT_EQ(Verify(), kExitPropertyFailure);
  std::string report = ReadText(fs::path(config_.out_dir) / kReportMachineFile);
  EXPECT_NE(report.find("inconclusive"), std::string::npos);
}

TEST_F(PipelineTest, MachineOutputsAreByteStable) {
  ASSERT_EQ(Verify(), kExitOk);
  std::string ftm = ReadText(fs::path(config_.out_dir) / kFtmMachineFile);
  std::string report = ReadText(fs::path(config_.out_dir) / kReportMachineFile);
  config_.out_dir = dir_ / "again";
  ASSERT_EQ(Verify(), kExitOk);
  EXPECT_EQ(ReadText(fs::path(config_.out_dir) / kFtmMachineFile), ftm);
  EXPECT_EQ(ReadText(fs::path(config_.out_dir) / kReportMachineFile), report);
}

TEST_F(PipelineTest, SimulateOutcomes) {
  SimulateRequest req;
  req.src_terminal = "laptop1";
  req.dst_terminal = "web";
  req.ip_proto = 6;
  req.tp_dst = 80;
  EXPECT_EQ(CmdSimulate(config_, req, out_, err_), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("delivered"), std::string::npos) << out_.str();

  out_.str("");
  req.tp_dst = 22;
  EXPECT_EQ(CmdSimulate(config_, req, out_, err_), kExitPropertyFailure);
  EXPECT_NE(out_.str().find("default"), std::string::npos) << out_.str();

  req.src_terminal = "ghost";
  EXPECT_EQ(CmdSimulate(config_, req, out_, err_), kExitInputError);
}

}  // namespace
}  // namespace sdnpolicy
