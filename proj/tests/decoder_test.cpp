#include "homm/decoder.hpp"

#include <gtest/gtest.h>

#include <random>

#include "homm/complex.hpp"
#include "test_util.hpp"

using namespace homm;
using f2::BitMatrix;
using f2::BitVec;

namespace {

// syndrome of a correction in graph terms, boundary hits dropped
BitVec graph_syndrome(const DecodingGraph& g, const BitVec& correction) {
  BitVec s(g.num_nodes);
  for (const auto& e : g.edges) {
    if (!correction.get(e.qubit)) continue;
    s.flip(static_cast<std::size_t>(e.a));
    if (e.b != DecodingGraph::kBoundary) s.flip(static_cast<std::size_t>(e.b));
  }
  return s;
}

}  // namespace

TEST(DecodingGraph, CylinderDualHasSixBoundaryEdges) {
  auto code = css_of_complex(build_cylinder(3, 3));
  auto g = DecodingGraph::from_checks(code.h_z);
  EXPECT_EQ(g.num_nodes, 6u);
  EXPECT_EQ(g.num_qubits, 15u);
  std::size_t boundary = 0;
  for (const auto& e : g.edges)
    if (e.b == DecodingGraph::kBoundary) ++boundary;
  EXPECT_EQ(boundary, 6u);
}

TEST(DecodingGraph, RejectsHypergraphChecks) {
  EXPECT_THROW(DecodingGraph::from_checks(BitMatrix::from_rows({"100", "100", "100"})),
               std::invalid_argument);
}

TEST(Matching, EmptySyndromeGivesEmptyCorrection) {
  auto code = css_of_complex(build_cylinder(3, 3));
  auto g = DecodingGraph::from_checks(code.h_z);
  EXPECT_TRUE(matching_decode(g, BitVec(6)).zero());
}

TEST(Matching, SingleDefectMatchesToBoundary) {
  auto code = css_of_complex(build_cylinder(3, 3));
  MatchingDecoder dec(DecodingGraph::from_checks(code.h_z));
  auto defects = BitVec::unit(6, 0);  // a face in the boundary row
  auto corr = dec.decode(defects);
  EXPECT_EQ(corr.weight(), 1u);
  EXPECT_EQ(graph_syndrome(dec.graph(), corr), defects);
}

TEST(Matching, TwoDefectsTwoApartGetWeightTwo) {
  auto code = css_of_complex(build_cylinder(3, 3));
  MatchingDecoder dec(DecodingGraph::from_checks(code.h_z));
  BitVec defects(6);
  defects.set(0);  // F(0,0)
  defects.set(4);  // F(1,1): no shared edge, dual distance 2
  auto corr = dec.decode(defects);
  EXPECT_EQ(graph_syndrome(dec.graph(), corr), defects);
  EXPECT_EQ(corr.weight(), 2u);
  // brute force: no weight-1 correction reproduces this syndrome
  for (std::size_t q = 0; q < 15; ++q)
    EXPECT_NE(graph_syndrome(dec.graph(), BitVec::unit(15, q)), defects);
}

TEST(Matching, OddParityWithoutBoundaryThrows) {
  auto code = css_of_complex(build_torus(3));
  MatchingDecoder dec(DecodingGraph::from_checks(code.h_z));
  EXPECT_THROW(dec.decode(BitVec::unit(9, 4)), std::invalid_argument);
}

TEST(Matching, ExactIsMinimumWeightAndUnionFindIsValid) {
  std::mt19937_64 rngesus(41);
  for (const auto& code :
       {css_of_complex(build_cylinder(5, 5)), css_of_complex(build_torus(4))}) {
    MatchingDecoder dec(DecodingGraph::from_checks(code.h_z));
    for (int t = 0; t < 200; ++t) {
      auto error = testutil::random_vec(rngesus, code.n, 0.08);
      auto defects = code.h_z.mul(error);
      auto exact = dec.decode(defects, DecoderMode::Exact);
      auto uf = dec.decode(defects, DecoderMode::UnionFind);
      EXPECT_EQ(graph_syndrome(dec.graph(), exact), defects);
      EXPECT_EQ(graph_syndrome(dec.graph(), uf), defects);
      EXPECT_LE(exact.weight(), uf.weight());
      EXPECT_LE(exact.weight(), error.weight());  // never beaten by the actual error
    }
  }
}

TEST(Matching, RepetitionAncillaHasNothingToDecode) {
  // no Z-checks at all: the decoding graph is empty and every readout
  // is taken at face value
  auto g = DecodingGraph::from_checks(BitMatrix(0, 5));
  EXPECT_EQ(g.num_nodes, 0u);
  EXPECT_TRUE(matching_decode(g, BitVec(0)).zero());
}
