// Copyright 2026 The maqaoa Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "maqaoa/dataset.h"

using namespace maqaoa;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string &name) {
  auto dir = fs::temp_directory_path() / ("maqaoa_dataset_test_" + name);
  fs::remove_all(dir);
  return dir;
}

} // namespace

TEST(Dataset, NineNodeBinSatisfiesManifestInvariants) {
  DatasetRequest req{1, 9, 0.6, 3, 40, 12345};
  auto ds = generate_dataset(req);
  ASSERT_EQ(ds.manifest.count, 40);
  ASSERT_EQ(ds.graphs.size(), 40u);
  std::set<std::string> keys;
  int hist = 0;
  for (const auto &rec : ds.graphs) {
    EXPECT_TRUE(is_connected(rec.graph));
    EXPECT_EQ(rec.c_depth, 3);
    EXPECT_EQ(covering_depth(rec.graph), 3);
    EXPECT_GE(rec.diameter, 2);
    EXPECT_LE(rec.diameter, 4);
    EXPECT_TRUE(keys.insert(canonical_key(rec.graph)).second);
  }
  for (int h : ds.manifest.diameter_histogram)
    hist += h;
  EXPECT_EQ(hist, 40);
  // Dense 9-node graphs of c-depth 3 mostly have diameter 2.
  EXPECT_GT(ds.manifest.diameter_histogram[0], ds.manifest.diameter_histogram[2]);
}

TEST(Dataset, SparseTwelveNodeBinIsFeasible) {
  DatasetRequest req{7, 12, 0.1, 6, 20, 77, 2'000'000};
  auto ds = generate_dataset(req);
  ASSERT_EQ(ds.graphs.size(), 20u);
  for (const auto &rec : ds.graphs) {
    EXPECT_EQ(rec.c_depth, 6);
    EXPECT_GE(rec.diameter, 5);
    EXPECT_LE(rec.diameter, 7);
  }
}

TEST(Dataset, CapExhaustion) {
  DatasetRequest req{0, 4, 0.99, 5, 1, 3, 1000};
  try {
    generate_dataset(req);
    FAIL() << "expected DatasetExhausted";
  } catch (const DatasetExhausted &e) {
    EXPECT_EQ(e.collected, 0);
  }
}

TEST(Dataset, WriteIsDeterministicAndReadable) {
  DatasetRequest req{3, 8, 0.6, 3, 15, 99};
  auto a = scratch_dir("a"), b = scratch_dir("b");
  write_dataset(generate_dataset(req), a.string());
  write_dataset(generate_dataset(req), b.string());
  for (const auto &entry : fs::directory_iterator(a))
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename()))
        << entry.path();
  EXPECT_TRUE(fs::exists(a / "graph_0014.txt"));

  auto manifest = slurp(a / "manifest.json");
  EXPECT_LT(manifest.find("\"set_id\""), manifest.find("\"n\""));
  EXPECT_LT(manifest.find("\"rng_seed\""), manifest.find("\"diameter_histogram\""));

  auto back = read_dataset(a.string());
  EXPECT_EQ(back.manifest.count, 15);
  EXPECT_EQ(back.manifest.rng_seed, 99u);
  ASSERT_EQ(back.graphs.size(), 15u);
  EXPECT_EQ(back.graphs[0].id, "graph_0000");
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Dataset, UnreadableGraphIsSkipped) {
  DatasetRequest req{0, 6, 0.6, 2, 4, 5};
  auto dir = scratch_dir("skip");
  write_dataset(generate_dataset(req), dir.string());
  std::ofstream(dir / "graph_0002.txt") << "garbage\n";
  std::vector<std::string> skipped;
  auto ds = read_dataset(dir.string(), &skipped);
  EXPECT_EQ(ds.graphs.size(), 3u);
  ASSERT_EQ(skipped.size(), 1u);
  EXPECT_NE(skipped[0].find("graph_0002"), std::string::npos);
  fs::remove_all(dir);
}
