/*
 * Copyright 2026 The fracpair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "fracpair/errors.hpp"
#include "fracpair/io.hpp"

using namespace fracpair;
namespace fs = std::filesystem;

class IoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fracpair_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST(FormatDouble, round_trip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng) * std::pow(10.0, i % 40 - 20);
    EXPECT_EQ(parse_double(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(parse_double(format_double(5e-324)), 5e-324);
  EXPECT_THROW(parse_double("abc"), IoError);
  EXPECT_THROW(parse_double("1.0x"), IoError);
}

TEST_F(IoTest, csv_round_trip) {
  Table t{{"a", "b", "note"}, {}};
  t.add_row({"1.5", "-2", "x,y"});
  t.add_row({"0.10000000000000001", "3", "say \"hi\""});
  const auto p = dir_ / "t.csv";
  write_csv(p, t);
  const auto text = slurp(p);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.substr(0, 9), "a,b,note\n");
  const auto back = read_csv(p);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(back.numbers("a"), (std::vector<double>{1.5, 0.1}));
}

TEST_F(IoTest, json_round_trip) {
  Table t{{"r", "label"}, {}};
  t.add_row({"0.25", "first"});
  t.add_row({"1e-300", "second"});
  const Manifest m{{"command", "simulate"}, {"alpha", "0.5"}};
  const auto p = dir_ / "t.json";
  write_json(p, m, t);
  const auto back = read_json(p);
  EXPECT_EQ(back.manifest, m);
  EXPECT_EQ(back.table.columns, t.columns);
  EXPECT_EQ(back.table.numbers("r"), (std::vector<double>{0.25, 1e-300}));
  const auto text = slurp(p);
  EXPECT_NE(text.find("\"manifest\""), std::string::npos);
  EXPECT_NE(text.find("\"rows\""), std::string::npos);
}

TEST_F(IoTest, cloud_round_trip) {
  WeightedPointCloud cloud{{Complex(0.1, -0.2), Complex(1.0 / 3.0, 2.0 / 7.0)}, 1.0 / 49.0, {}};
  write_csv(dir_ / "c.csv", cloud_table(cloud));
  const auto back = cloud_from_table(read_csv(dir_ / "c.csv"));
  EXPECT_EQ(back.points, cloud.points);
  EXPECT_EQ(back.weight, cloud.weight);
}

TEST_F(IoTest, radial_round_trip) {
  RadialHistogram h;
  h.edges = {0.0, 0.5, 1.0};
  h.mass = {0.125, 1.0 / 3.0};
  h.density = {0.125 / (std::numbers::pi * 0.25), (1.0 / 3.0) / (std::numbers::pi * 0.75)};
  write_json(dir_ / "r.json", {}, radial_table(h));
  const auto back = radial_from_table(read_json(dir_ / "r.json").table);
  EXPECT_EQ(back.edges, h.edges);
  EXPECT_EQ(back.mass, h.mass);
  EXPECT_EQ(back.density, h.density);
}

TEST_F(IoTest, missing_file) {
  EXPECT_THROW(read_csv(dir_ / "nope.csv"), IoError);
  EXPECT_THROW(read_json(dir_ / "nope.json"), IoError);
  EXPECT_THROW(write_csv(dir_ / "no_dir" / "x.csv", Table{{"a"}, {}}), IoError);
}

TEST_F(IoTest, malformed_input) {
  std::ofstream(dir_ / "bad.json") << "{not json";
  EXPECT_THROW(read_json(dir_ / "bad.json"), IoError);
  std::ofstream(dir_ / "ragged.csv") << "a,b\n1\n";
  EXPECT_THROW(read_csv(dir_ / "ragged.csv"), IoError);
}

TEST(Table, lookups) {
  Table t{{"x", "y"}, {}};
  t.add_row({1.0, 2.0});
  EXPECT_EQ(t.column("y"), 1u);
  EXPECT_THROW(t.column("z"), IoError);
  EXPECT_THROW(t.add_row({1.0}), ValidationError);
}

TEST(Tables, density_table_has_both_sides_of_jumps) {
  const DensityModel model(1.0 / 3.0, LatticeBasis{}, LimitClass::finite, 1.0, 2.0);
  const auto t = density_table(model, 1.0, 10);
  const auto r = t.numbers("r");
  const auto rho = t.numbers("rho");
  EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
  std::size_t at_third = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::abs(r[i] - 1.0 / 3.0) < 1e-15) {
      ++at_third;
      EXPECT_TRUE(rho[i] == 0.0 || rho[i] == model.rho(1.0 / 3.0));
    }
  }
  EXPECT_EQ(at_third, 2u);
}

TEST(Tables, planar_uses_cell_centers) {
  WeightedPointCloud cloud{{Complex(0.1, 0.1)}, 1.0, {}};
  const auto t = planar_table(planar_histogram(cloud, 1.0, 2));
  EXPECT_EQ(t.rows.size(), 4u);
  const auto x = t.numbers("cell_x");
  EXPECT_EQ(x[0], -0.5);
  EXPECT_EQ(x[1], 0.5);
}
