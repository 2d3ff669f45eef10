#include "boxlike/config.hpp"

#include "../common/fixtures.hpp"

#include <doctest.h>

using namespace boxlike;

TEST_CASE("fixture files parse to the expected systems") {
    CHECK(load_ifs_config(testutil::fixture_path("nonseparated_carpet.toml")).maps ==
          testutil::nonseparated_carpet().maps);
    CHECK(load_ifs_config(testutil::fixture_path("blocktype_carpet.toml")).maps ==
          testutil::blocktype_carpet().maps);
    CHECK(load_ifs_config(testutil::fixture_path("nonseparated_carpet_axis.toml")).maps ==
          testutil::nonseparated_carpet_axis().maps);
    CHECK(load_ifs_config(testutil::fixture_path("blocktype_carpet_axis.toml")).maps ==
          testutil::blocktype_carpet_axis().maps);
    CHECK(load_ifs_config(testutil::fixture_path("grid2x2.toml")).maps ==
          testutil::grid2x2().maps);
    CHECK(load_ifs_config(testutil::fixture_path("corner3.toml")).maps ==
          testutil::corner3().maps);
    CHECK(load_ifs_config(testutil::fixture_path("overlapping.toml")).maps ==
          testutil::overlapping_pair().maps);
}

TEST_CASE("rect and raw forms are interchangeable") {
    const std::string rect_form = R"(
[[map]]
iso = "rot270"
rect = ["3/5", "1", "3/4", "1"]

[[map]]
rect = ["0", "1/2", "0", "1/2"]
)";
    const std::string raw_form = R"(
[[map]]
a = "2/5"
b = "1/4"
iso = "rot270"
t = ["1", "3/4"]

[[map]]
a = "1/2"
b = "1/2"
iso = "id"
t = ["0", "0"]
)";
    CHECK(parse_ifs_config(rect_form).maps == parse_ifs_config(raw_form).maps);
}

TEST_CASE("decimals and bare numbers are accepted") {
    const BoxLikeIFS ifs = parse_ifs_config(R"(
[[map]]
rect = [0, 0.5, 0, 0.5]

[[map]]
a = 0.25
b = "0.5"
t = [0.75, 0.5]
)");
    CHECK(ifs.maps[0].a == Rational(1, 2));
    CHECK(ifs.maps[1].a == Rational(1, 4));
    CHECK(ifs.maps[1].tx == Rational(3, 4));
}

TEST_CASE("comments and blank lines are ignored") {
    const BoxLikeIFS ifs = parse_ifs_config(R"(
# leading comment
[[map]]
rect = ["0", "1/2", "0", "1/2"]  # trailing comment

[[map]]
iso = "reflect_v"   # the fill color is "#fff"-agnostic
rect = ["1/2", "1", "1/2", "1"]
)");
    CHECK(ifs.size() == 2);
    CHECK(ifs.maps[1].iso == Dihedral::ReflectV);
}

TEST_CASE("errors carry the line and field") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_ifs_config(text, "test.toml");
            FAIL_CHECK("expected ConfigError for: " << needle);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            CHECK(std::string(e.what()).find("test.toml") != std::string::npos);
        }
    };

    expect_error("[[map]]\niso = \"rot45\"\nrect = [\"0\",\"1/2\",\"0\",\"1/2\"]\n[[map]]\nrect = [\"1/2\",\"1\",\"0\",\"1/2\"]\n",
                 "unknown isometry");
    expect_error("[[map]]\nrect = [\"0\",\"1/2\",\"0\"]\n", "[x0, x1, y0, y1]");
    expect_error("[[map]]\nrect = [\"0\",\"1/2\",\"0\",\"abc\"]\n", "cannot parse rational");
    expect_error("[[map]]\na = \"1/2\"\nb = \"1/2\"\n", "missing 't'");
    expect_error("a = \"1/2\"\n", "before the first [[map]]");
    expect_error("[[map]]\nrect = [\"0\",\"1/2\",\"0\",\"1/2\"]\nrect = [\"0\",\"1\",\"0\",\"1\"]\n",
                 "duplicate key");
    expect_error("[[other]]\n", "only [[map]]");
    expect_error("[[map]]\nrect = [\"0\",\"1/2\",\"0\",\"1/2\"]\na = \"1/2\"\n", "not both");
    expect_error("", "no [[map]] tables");
    expect_error("[[map]]\nrect = [\"0\",\"3/2\",\"0\",\"1/2\"]\n", "leaves the unit square");
    expect_error("[[map]]\nrect = [\"0\",\"0\",\"0\",\"1/2\"]\n", "degenerate");
    // a single map fails IFS validation
    expect_error("[[map]]\nrect = [\"0\",\"1/2\",\"0\",\"1/2\"]\n", "at least 2 maps");
}

TEST_CASE("line numbers point at the offending line") {
    try {
        parse_ifs_config("[[map]]\nrect = [\"0\",\"1/2\",\"0\",\"1/2\"]\n\n[[map]]\niso = \"nope\"\nrect = [\"1/2\",\"1\",\"0\",\"1/2\"]\n",
                         "cfg");
        FAIL_CHECK("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 5);
        CHECK(std::string(e.what()).find("cfg:5:") != std::string::npos);
    }
}

TEST_CASE("canonical config round-trips exactly") {
    for (const BoxLikeIFS& ifs :
         {testutil::nonseparated_carpet(), testutil::blocktype_carpet(), testutil::grid2x2(),
          testutil::corner3(), testutil::blocktype_carpet_axis()}) {
        const std::string text = canonical_config(ifs);
        CHECK(parse_ifs_config(text).maps == ifs.maps);
    }
}

TEST_CASE("missing file raises a readable error") {
    CHECK_THROWS_WITH_AS(load_ifs_config("/nonexistent/nowhere.toml"),
                         doctest::Contains("cannot open"), std::runtime_error);
}
