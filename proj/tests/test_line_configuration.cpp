#include <gtest/gtest.h>

#include <set>

#include "dp4/json_io.hpp"

using namespace dp4;

namespace {

const LineConfiguration& config() {
  static const LineConfiguration cfg = lines16();
  return cfg;
}

std::set<int> side_set(const PartitionSide& s) {
  std::set<int> out;
  for (const auto& [a, b] : s.pairs) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

}  // namespace

TEST(Lines, ClassesAndIncidence) {
  const auto& cfg = config();
  ASSERT_EQ(cfg.lines.size(), 16u);
  LineClass total{};
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(intersect(cfg.lines[i], cfg.lines[i]), -1);
    EXPECT_EQ(intersect(cfg.lines[i], anticanonical()), 1);
    int meets = 0;
    for (std::size_t j = 0; j < 16; ++j) {
      EXPECT_TRUE(cfg.incidence[i][j] == 0 || cfg.incidence[i][j] == 1);
      EXPECT_EQ(cfg.incidence[i][j], cfg.incidence[j][i]);
      meets += cfg.incidence[i][j];
    }
    EXPECT_EQ(meets, 5);
    total = detail::add(total, cfg.lines[i]);
  }
  // sum of the lines is -4K = (12; -4, ..., -4) in raw coordinates
  EXPECT_EQ(total, (LineClass{12, -4, -4, -4, -4, -4}));
}

TEST(Partitions, ExactlyFiveAndEachIsAPartition) {
  const auto& cfg = config();
  ASSERT_EQ(cfg.partitions.size(), 5u);
  std::set<std::set<int>> sides;
  for (const auto& p : cfg.partitions) {
    std::vector<int> seen(16, 0);
    for (const auto& side : p.sides) {
      ASSERT_EQ(side.pairs.size(), 4u);
      for (const auto& [a, b] : side.pairs) {
        EXPECT_EQ(cfg.incidence[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], 1);
        ++seen[static_cast<std::size_t>(a)];
        ++seen[static_cast<std::size_t>(b)];
      }
      sides.insert(side_set(side));
    }
    for (int c : seen) EXPECT_EQ(c, 1);
    // the two conic classes add up to -K
    EXPECT_EQ(detail::add(p.sides[0].conic, p.sides[1].conic), (LineClass{3, -1, -1, -1, -1, -1}));
  }
  EXPECT_EQ(sides.size(), 10u);
}

TEST(Partitions, IndexedByPoint) {
  // partition i: one side pairs E_j with L - E_i - E_j for j != i
  const auto& cfg = config();
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& side = cfg.partitions[i].sides[0];
    LineClass conic{1, 0, 0, 0, 0, 0};
    conic[i + 1] = -1;
    EXPECT_EQ(side.conic, conic);
    for (const auto& [a, b] : side.pairs) {
      const auto& la = cfg.lines[static_cast<std::size_t>(a)];
      const auto& lb = cfg.lines[static_cast<std::size_t>(b)];
      EXPECT_EQ(la[0] + lb[0], 1);
    }
    // E_i lies on the other side together with 2L - sum E
    const auto other = side_set(cfg.partitions[i].sides[1]);
    EXPECT_TRUE(other.count(static_cast<int>(i)));
    EXPECT_TRUE(other.count(15));
  }
}

TEST(Weyl, OrderKernelQuotient) {
  const auto& cfg = config();
  const WeylGroup& w = weyl_group(cfg);
  EXPECT_EQ(w.elements.size(), 1920u);
  EXPECT_EQ(w.kernel.size(), 16u);
  EXPECT_EQ(w.quotient_order, 120u);
  EXPECT_EQ(w.s5.size(), 120u);
  std::set<SignedPermutation> distinct;
  for (const auto& e : w.elements) {
    EXPECT_TRUE(e.on_partitions.even());
    distinct.insert(e.on_partitions);
  }
  // faithful on signed partitions: all 1920 = 2^4 * 5! even signed permutations
  EXPECT_EQ(distinct.size(), 1920u);
}

TEST(Weyl, KernelSimplyTransitive) {
  const auto& cfg = config();
  const WeylGroup& w = weyl_group(cfg);
  for (int line = 0; line < 16; ++line) {
    std::set<int> orbit;
    int stabilizer = 0;
    for (std::size_t k : w.kernel) {
      const int img = w.elements[k].on_lines[static_cast<std::size_t>(line)];
      orbit.insert(img);
      stabilizer += img == line;
    }
    EXPECT_EQ(orbit.size(), 16u);
    EXPECT_EQ(stabilizer, 1);
  }
}

TEST(Weyl, VertexTransitiveAndPreservesIncidence) {
  const auto& cfg = config();
  const WeylGroup& w = weyl_group(cfg);
  std::set<int> orbit;
  for (const auto& e : w.elements) {
    orbit.insert(e.on_lines[0]);
    for (std::size_t a = 0; a < 16; ++a)
      for (std::size_t b = 0; b < 16; ++b)
        ASSERT_EQ(cfg.incidence[a][b], cfg.incidence[static_cast<std::size_t>(e.on_lines[a])][static_cast<std::size_t>(e.on_lines[b])]);
  }
  EXPECT_EQ(orbit.size(), 16u);
}

TEST(Weyl, CompositionMatchesLineAction) {
  const auto& cfg = config();
  const WeylGroup& w = weyl_group(cfg);
  for (std::size_t i = 0; i < w.elements.size(); i += 97)
    for (std::size_t j = 0; j < w.elements.size(); j += 131) {
      const auto& g = w.elements[i];
      const auto& h = w.elements[j];
      std::array<int, 16> gh{};
      for (std::size_t k = 0; k < 16; ++k) gh[k] = g.on_lines[static_cast<std::size_t>(h.on_lines[k])];
      EXPECT_EQ(detail::partition_action(cfg, gh), g.on_partitions * h.on_partitions);
    }
}

TEST(Weyl, S5IsUnsigned) {
  const auto& cfg = config();
  const WeylGroup& w = weyl_group(cfg);
  for (std::size_t k : w.s5) EXPECT_TRUE(w.elements[k].on_partitions.unsigned_only());
}

TEST(Weyl, NoIntermediateSubgroup) {
  const auto& cfg = config();
  EXPECT_TRUE(no_intermediate_subgroup(cfg));
  const SignedPermutation t{{1, 0, 2, 3, 4}, {1, 1, 1, 1, 1}}, c{{1, 2, 3, 4, 0}, {1, 1, 1, 1, 1}};
  EXPECT_EQ(generated_order({t, c}), 120u);
  const SignedPermutation flip12{{0, 1, 2, 3, 4}, {-1, -1, 1, 1, 1}};
  EXPECT_EQ(generated_order({t, c, flip12}), 1920u);
}

TEST(Graph, SpectrumAndTriangles) {
  const auto& cfg = config();
  EXPECT_EQ(incidence_spectrum(cfg), (std::map<int, int>{{-3, 5}, {1, 10}, {5, 1}}));
  EXPECT_TRUE(triangle_free(cfg));
}

TEST(Golden, LinesReportMatches) {
  const std::string path = golden_dir(std::string(DP4_SOURCE_DIR) + "/data/golden/v1") + "/lines_report.json";
  EXPECT_EQ(lines_report(), read_json_file(path));
}
