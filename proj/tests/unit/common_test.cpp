#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "dralns/common/csv.hpp"
#include "dralns/common/geometry.hpp"
#include "dralns/common/random.hpp"

namespace dralns {
namespace {

TEST(Random, DerivedSeedsAreStableAndSeparated) {
  EXPECT_EQ(derive_seed(7, "search", 1), derive_seed(7, "search", 1));
  std::set<std::uint64_t> seen;
  for (const char* stream : {"search", "noise", "policy", "env"}) {
    for (std::uint64_t base : {0ULL, 1ULL, 7ULL}) {
      for (std::uint64_t i = 0; i < 4; ++i) seen.insert(derive_seed(base, stream, i));
    }
  }
  EXPECT_EQ(seen.size(), 48u);
  Rng a = make_rng(1, "x"), b = make_rng(1, "x");
  EXPECT_EQ(a(), b());
}

TEST(Random, UniformHelpersStayInRange) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(uniform_index(rng, 3), 3u);
  }
  EXPECT_EQ(uniform_index(rng, 1), 0u);
}

TEST(Geometry, DistanceMatrixIsSymmetric) {
  const DistanceMatrix d({{0, 0}, {3, 4}, {1, 1}});
  EXPECT_DOUBLE_EQ(d(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(d(1, 0), 5.0);
  EXPECT_DOUBLE_EQ(d(2, 2), 0.0);
  EXPECT_DOUBLE_EQ(d(0, 2), std::sqrt(2.0));
}

TEST(Csv, RealsRoundTrip) {
  for (const double v : {0.1 + 0.2, 1.0 / 3.0, -2.5, 1e-300, 12345678.875, 0.0}) {
    EXPECT_EQ(std::stod(format_real(v)), v);
  }
  EXPECT_EQ(format_real(2.0), "2");
}

TEST(Csv, WriteAndRead) {
  const auto path = std::filesystem::path(::testing::TempDir()) / "dralns_csv.csv";
  {
    std::ofstream out(path);
    CsvWriter w(out);
    w.header({"name", "value", "count", "flag"});
    w.field("a").field(0.5).field(3).field(true);
    w.end_row();
    w.field("b").field(-1.25).field(std::size_t{4}).field(false);
    w.end_row();
  }
  const CsvTable t = read_csv(path.string());
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.column("count"), 2u);
  EXPECT_EQ(t.rows[1][t.column("value")], "-1.25");
  EXPECT_EQ(t.rows[0][t.column("flag")], "1");
  EXPECT_ANY_THROW(t.column("missing"));
}

}  // namespace
}  // namespace dralns
