#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "realign/criteria.hpp"
#include "realign/state_io.hpp"
#include "support/random_states.hpp"

using namespace realignment;
using realignment::testing::Rng;

TEST(StateIoTest, RoundTripBell) {
    const DensityMatrix bell = max_entangled(2);
    const std::string text = state_to_json(bell, "bell");
    const StateFile parsed = parse_state_json(text);
    EXPECT_EQ(parsed.label, "bell");
    EXPECT_TRUE(parsed.state.dims() == bell.dims());
    EXPECT_LE(ComplexMatrix::max_abs_diff(parsed.state.matrix(), bell.matrix()), 1e-12);
}

TEST(StateIoTest, RoundTripPreservesDetectionValues) {
    Rng rng(61);
    const DensityMatrix rho = realignment::testing::random_state(DimensionSignature::bipartite(3, 3), rng);
    const StateFile parsed = parse_state_json(state_to_json(rho));
    const DetectionReport before = detect(rho, all_criteria());
    const DetectionReport after = detect(parsed.state, all_criteria());
    ASSERT_EQ(before.results.size(), after.results.size());
    for (std::size_t i = 0; i < before.results.size(); ++i) {
        EXPECT_NEAR(before.results[i].value, after.results[i].value, 1e-12);
        EXPECT_NEAR(before.results[i].threshold, after.results[i].threshold, 1e-12);
        EXPECT_EQ(before.results[i].violated, after.results[i].violated);
    }
}

TEST(StateIoTest, RoundTripTripartite) {
    const DensityMatrix g = ghz();
    const StateFile parsed = parse_state_json(state_to_json(g, "ghz"));
    EXPECT_TRUE(parsed.state.dims().is_tripartite());
    EXPECT_LE(ComplexMatrix::max_abs_diff(parsed.state.matrix(), g.matrix()), 1e-12);
}

TEST(StateIoTest, FileRoundTrip) {
    const std::string path = ::testing::TempDir() + "state_io_roundtrip.json";
    write_state_file(path, max_entangled(3), "phi3");
    const StateFile parsed = read_state_file(path);
    EXPECT_EQ(parsed.label, "phi3");
    EXPECT_LE(ComplexMatrix::max_abs_diff(parsed.state.matrix(), max_entangled(3).matrix()),
              1e-12);
    std::remove(path.c_str());
    EXPECT_THROW(read_state_file(path), ParseError);
}

TEST(StateIoTest, ParseErrors) {
    EXPECT_THROW(parse_state_json("not json"), ParseError);
    EXPECT_THROW(parse_state_json("[1,2,3]"), ParseError);
    EXPECT_THROW(parse_state_json(R"({"entries": []})"), ParseError);
    EXPECT_THROW(parse_state_json(R"({"dims": {"kind": "bipartite", "m": 2, "n": 2}})"), ParseError);
    EXPECT_THROW(parse_state_json(R"({"dims": {"kind": "pentapartite"}, "entries": []})"),
                 ParseError);
    EXPECT_THROW(parse_state_json(R"({"dims": {"kind": "bipartite", "m": 1, "n": 2}, "entries": []})"),
                 ParseError);
    // wrong entry count
    EXPECT_THROW(parse_state_json(R"({"dims": {"kind": "bipartite", "m": 2, "n": 2},
                                      "entries": [[1, 0]]})"),
                 ParseError);
    // entries must be [re, im] pairs
    EXPECT_THROW(parse_state_json(R"({"dims": {"kind": "bipartite", "m": 2, "n": 2},
                                      "entries": [1, 0, 0, 0, 0, 0, 0, 0,
                                                  0, 0, 0, 0, 0, 0, 0, 0]})"),
                 ParseError);
}

TEST(StateIoTest, ValidationErrorsPropagate) {
    // unit trace but one negative eigenvalue
    std::string bad = R"({"dims": {"kind": "bipartite", "m": 2, "n": 2}, "entries": [)";
    for (int i = 0; i < 16; ++i) {
        const int r = i / 4, c = i % 4;
        double v = 0.0;
        if (r == c) v = (r == 0) ? 1.001 : (r == 3 ? -0.001 : 0.0);
        bad += "[" + std::to_string(v) + ", 0]";
        if (i != 15) bad += ",";
    }
    bad += "]}";
    EXPECT_THROW(parse_state_json(bad), ValidationError);
}
