#include "atomique/arch.hpp"
#include "atomique/stage_router.hpp"

#include <gtest/gtest.h>

using namespace atomique;

TEST(Config, EmptyObjectGivesDefaults) {
  const auto cfg = parseConfig("{}");
  EXPECT_EQ(cfg.arch.n_aod, 2);
  ASSERT_EQ(cfg.arch.shapes.size(), 3U);
  for (const auto& s : cfg.arch.shapes) {
    EXPECT_EQ(s, (ArrayShape{10, 10}));
  }
  EXPECT_DOUBLE_EQ(cfg.arch.D_site, 15.0);
  EXPECT_DOUBLE_EQ(cfg.arch.r_b, 2.5);
  EXPECT_DOUBLE_EQ(cfg.arch.delta, 0.5);
  EXPECT_DOUBLE_EQ(cfg.arch.T_per_move, 300e-6);
  EXPECT_DOUBLE_EQ(cfg.hw.f_1Q, 0.9992);
  EXPECT_DOUBLE_EQ(cfg.hw.f_2Q, 0.9975);
  EXPECT_DOUBLE_EQ(cfg.hw.t_1Q, 625e-9);
  EXPECT_DOUBLE_EQ(cfg.hw.t_2Q, 380e-9);
  EXPECT_DOUBLE_EQ(cfg.hw.T1, 1.5);
  EXPECT_DOUBLE_EQ(cfg.hw.P_loss_transfer, 0.0068);
  EXPECT_DOUBLE_EQ(cfg.hw.T_transfer, 15e-6);
  EXPECT_DOUBLE_EQ(cfg.hw.x_zpf, 38e-9);
  EXPECT_NEAR(cfg.hw.omega0, 2 * M_PI * 80e3, 1e-9);
  EXPECT_DOUBLE_EQ(cfg.hw.lambda, 0.109);
  EXPECT_DOUBLE_EQ(cfg.hw.n_vib_max, 33.0);
  EXPECT_DOUBLE_EQ(cfg.hw.n_cool_threshold, 15.0);
}

TEST(Config, SmallPitchRejectedWithKey) {
  try {
    parseConfig(R"({"D_site": 5})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "D_site");
  }
}

TEST(Config, ScaledCoherenceAccepted) {
  EXPECT_DOUBLE_EQ(parseConfig(R"({"T1": 15.0})").hw.T1, 15.0);
}

TEST(Config, ShapesPerArray) {
  const auto cfg =
      parseConfig(R"({"n_aod": 1, "rows": [4, 3], "cols": 5})");
  ASSERT_EQ(cfg.arch.shapes.size(), 2U);
  EXPECT_EQ(cfg.arch.shapes[0], (ArrayShape{4, 5}));
  EXPECT_EQ(cfg.arch.shapes[1], (ArrayShape{3, 5}));
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parseConfig(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(parseConfig(R"({"rows": [1, 2]})"), ConfigError);
  EXPECT_THROW(parseConfig(R"({"delta": 3.0})"), ConfigError);
  EXPECT_THROW(parseConfig(R"({"f_2Q": 1.2})"), ConfigError);
  EXPECT_THROW(parseConfig(R"({"n_cool_threshold": 40})"), ConfigError);
  EXPECT_THROW(parseConfig("[1,2]"), ConfigError);
  EXPECT_THROW(parseConfig("{"), ConfigError);
  EXPECT_THROW(loadConfig("/nonexistent/config.json"), ConfigError);
}

TEST(Config, OtherTwoQubitFidelitySelectable) {
  EXPECT_DOUBLE_EQ(parseConfig(R"({"f_2Q": 0.975})").hw.f_2Q, 0.975);
}

TEST(Config, RelaxList) {
  const auto cfg = parseConfig(R"({"relax": ["C2"]})");
  EXPECT_TRUE(cfg.arch.constraints.c1);
  EXPECT_FALSE(cfg.arch.constraints.c2);
  EXPECT_TRUE(cfg.arch.constraints.c3);
  EXPECT_THROW(parseConfig(R"({"relax": ["C9"]})"), ConfigError);
}

TEST(Config, CompilerSectionIgnoredByDevice) {
  EXPECT_NO_THROW(parseConfig(R"({"compiler": {"gamma": 0.5}})"));
}

class Positions : public ::testing::Test {
protected:
  ArchConfig arch;
  Placement placement;
};

TEST_F(Positions, SlmOrigin) {
  placement.slots = {{0, 0, 0}};
  const auto p = atomPositions(arch, placement, initialLanes(arch));
  EXPECT_DOUBLE_EQ(p[0].x, 0.0);
  EXPECT_DOUBLE_EQ(p[0].y, 0.0);
}

TEST_F(Positions, SlmLattice) {
  placement.slots = {{0, 2, 3}};
  const auto p = atomPositions(arch, placement, initialLanes(arch));
  EXPECT_DOUBLE_EQ(p[0].x, 45.0);
  EXPECT_DOUBLE_EQ(p[0].y, 30.0);
}

TEST_F(Positions, AodPinnedAgainstSlm) {
  placement.slots = {{0, 1, 1}, {1, 0, 0}};
  auto lanes = initialLanes(arch);
  lanes.aods[0].rows[0] = Lane{2, 0.0};
  lanes.aods[0].cols[0] = Lane{2, -arch.delta};
  const auto p = atomPositions(arch, placement, lanes);
  EXPECT_DOUBLE_EQ(p[1].x, 14.5);
  EXPECT_DOUBLE_EQ(p[1].y, 15.0);
}

TEST(Audit, IntendedPairClose) {
  ArchConfig arch;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0}, {1, 1, 0, 0, 0.5, 0.0}};
  EXPECT_TRUE(minSeparationAudit(atoms, {{0, 1}}, arch).empty());
}

TEST(Audit, UnintendedPairTooClose) {
  ArchConfig arch;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0}, {1, 1, 0, 0, 5.0, 0.0}};
  const auto v = minSeparationAudit(atoms, {}, arch);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, ViolationKind::Unintended);
  EXPECT_DOUBLE_EQ(v[0].distance, 5.0);
}

TEST(Audit, LatticePitchLegal) {
  ArchConfig arch;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0}, {1, 0, 0, 1, 15.0, 0.0}};
  EXPECT_TRUE(minSeparationAudit(atoms, {}, arch).empty());
}

TEST(Audit, IntendedPairTooFar) {
  ArchConfig arch;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0}, {1, 1, 0, 0, 3.0, 0.0}};
  const auto v = minSeparationAudit(atoms, {{1, 0}}, arch);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, ViolationKind::GateTooFar);
}

TEST(Audit, ThresholdIsInclusive) {
  ArchConfig arch;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0},
                               {1, 1, 0, 0, arch.sMin(), 0.0}};
  EXPECT_TRUE(minSeparationAudit(atoms, {}, arch).empty());
}

TEST(Audit, RelaxedC1SkipsUnintended) {
  ArchConfig arch;
  arch.constraints.c1 = false;
  std::vector<AtomCoord> atoms{{0, 0, 0, 0, 0.0, 0.0}, {1, 1, 0, 0, 5.0, 0.0}};
  EXPECT_TRUE(minSeparationAudit(atoms, {}, arch).empty());
}

TEST(Audit, FullSlmLatticeIsLegal) {
  ArchConfig arch;
  Placement p;
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 10; ++c) {
      p.slots.push_back({0, r, c});
    }
  }
  EXPECT_TRUE(
      minSeparationAudit(atomPositions(arch, p, initialLanes(arch)), {}, arch)
          .empty());
}

TEST(Placement, ValidateRejectsCollisionsAndRange) {
  ArchConfig arch;
  Placement p;
  p.slots = {{0, 0, 0}, {0, 0, 0}};
  EXPECT_THROW(p.validate(arch), std::invalid_argument);
  p.slots = {{1, 10, 0}};
  EXPECT_THROW(p.validate(arch), std::invalid_argument);
  p.slots = {{3, 0, 0}};
  EXPECT_THROW(p.validate(arch), std::invalid_argument);
  p.slots = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  EXPECT_NO_THROW(p.validate(arch));
  EXPECT_EQ(p.countIn(1), 1U);
}
