#include "homm/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace homm;
using f2::BitMatrix;

TEST(MatrixText, RoundTrip) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    auto m = testutil::random_matrix(rng, t % 5, 1 + t % 7);
    EXPECT_EQ(io::matrix_from_text(io::matrix_to_text(m)), m);
  }
}

TEST(MatrixText, RejectsMalformedInput) {
  EXPECT_THROW(io::matrix_from_text("junk"), std::invalid_argument);
  EXPECT_THROW(io::matrix_from_text("1 3\n01"), std::invalid_argument);
  EXPECT_THROW(io::matrix_from_text("1 3\n012"), std::invalid_argument);
}

TEST(CodeJson, RoundTripIncludingEmptyChecks) {
  auto torus = css_of_complex(build_torus(3));
  auto back = io::code_from_json(io::code_to_json(torus));
  EXPECT_EQ(back.h_x, torus.h_x);
  EXPECT_EQ(back.h_z, torus.h_z);
  EXPECT_EQ(back.k, torus.k);

  auto rep = css_of_complex(build_cylinder(3, 1));  // no Z checks
  auto rep2 = io::code_from_json(io::code_to_json(rep));
  EXPECT_EQ(rep2.h_z.rows(), 0u);
  EXPECT_EQ(rep2.h_z.cols(), 3u);
  EXPECT_EQ(rep2.k, 1u);
}

TEST(CodeJson, ValidatesOnLoad) {
  io::json j{{"n", 2}, {"h_x", {"11"}}, {"h_z", {"10"}}};
  EXPECT_THROW(io::code_from_json(j), CommutationViolation);
}

TEST(ComplexJson, RoundTripWithRoughSegments) {
  auto patch = build_planar_patch(3);
  auto back = io::complex_from_json(io::complex_to_json(patch));
  EXPECT_EQ(back.num_vertices, patch.num_vertices);
  EXPECT_EQ(back.rough, patch.rough);
  EXPECT_EQ(back.rough_segments.size(), 3u);
  EXPECT_EQ(css_of_complex(back).k, 2u);
  auto closed = close_rough_boundaries(back, {"left", "right-top"});
  EXPECT_EQ(css_of_complex(closed).k, 1u);
}

TEST(CellMapJson, RoundTripPreservesVerification) {
  TorusLattice t(3);
  auto anc = build_covering_ancilla_auto(t, t.loop_z1());
  auto back = io::cellmap_from_json(io::cellmap_to_json(anc.map));
  EXPECT_TRUE(verify_cellmap(back).ok());
  EXPECT_EQ(gate_matrix(back), gate_matrix(anc.map));
}

TEST(BundleJson, RoundTripRevalidates) {
  TorusLattice t(3);
  auto g = gadget_from_cellmap(build_covering_ancilla_auto(t, t.loop_z1()).map);
  auto j = io::bundle_to_json(g);
  auto back = io::bundle_from_json(j);
  EXPECT_EQ(back.gamma, g.gamma);
  EXPECT_TRUE(back.origin.has_value());
  EXPECT_EQ(measured_group(back).rank, 1u);

  // corrupt gamma: loading must fail with a gadget violation
  auto bad = j;
  std::string row = bad["gamma"][0];
  row[0] = row[0] == '1' ? '0' : '1';
  bad["gamma"][0] = row;
  EXPECT_THROW(io::bundle_from_json(bad), GadgetConditionViolation);
}

TEST(BundleJson, SerializationIsDeterministic) {
  TorusLattice t(3);
  auto g = gadget_from_cellmap(build_covering_ancilla_auto(t, t.loop_z1z2()).map);
  EXPECT_EQ(io::bundle_to_json(g).dump(2), io::bundle_to_json(g).dump(2));
  auto reparsed = io::bundle_from_json(io::json::parse(io::bundle_to_json(g).dump(2)));
  EXPECT_EQ(io::bundle_to_json(reparsed).dump(2), io::bundle_to_json(g).dump(2));
}
