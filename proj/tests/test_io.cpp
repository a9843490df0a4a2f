#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "curvechi/io.hpp"
#include "generators.hpp"

using namespace curvechi;
using namespace curvechi::testing;

namespace {

void check_same(const CurveFamily& a, const CurveFamily& b) {
    CHECK(a.kind() == b.kind());
    CHECK(a.t() == b.t());
    CHECK(a.scale() == b.scale());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id() == b[i].id());
        CHECK(a[i].level() == b[i].level());
        REQUIRE(a[i].strands().size() == b[i].strands().size());
        for (std::size_t s = 0; s < a[i].strands().size(); ++s)
            CHECK(a[i].strands()[s].points() == b[i].strands()[s].points());
    }
}

Json one_curve_file(Json points) {
    return Json{{"format", "curvechi-family"},
                {"version", 1},
                {"kind", "one-curve"},
                {"curves", Json::array({Json{{"id", "a"}, {"points", std::move(points)}}})}};
}

std::filesystem::path scratch() {
    const char* env = std::getenv("CURVECHI_TEST_TMP");
    auto dir = env ? std::filesystem::path(env) : std::filesystem::temp_directory_path() / "curvechi_io_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("random families round trip through JSON") {
    Rng rng(71);
    for (int t : {1, 2, 3}) {
        for (bool lr : {false, true}) {
            FamilyParams params;
            params.t = t;
            params.require_lr = lr;
            params.members = 8;
            params.span = 60;
            const CurveFamily f = random_family(rng, params);
            const Json j = family_to_json(f);
            check_same(f, family_from_json(j).family);
            check_same(f, family_from_json(parse_json(dump_json(j))).family);
        }
    }
}

TEST_CASE("Burling files keep probes and depth") {
    const auto inst = generate_burling(3);
    const FamilyFile file = family_from_json(parse_json(dump_json(burling_to_json(inst))));
    check_same(inst.family, file.family);
    CHECK(file.probes == inst.probes);
    REQUIRE(file.burling_k.has_value());
    CHECK(*file.burling_k == 3);
    const auto back = burling_from_file(file);
    CHECK(back.k == 3);
    CHECK_THROWS_AS(burling_from_file(FamilyFile{}), FormatError);
}

TEST_CASE("coordinates must be integers in range") {
    CHECK_NOTHROW(family_from_json(one_curve_file(Json::array({Json::array({0, 0}), Json::array({0, 2})}))));
    CHECK_THROWS_AS(family_from_json(one_curve_file(Json::array({Json::array({0, 0}), Json::array({0.5, 2})}))),
                    FormatError);
    CHECK_THROWS_AS(family_from_json(one_curve_file(Json::array({Json::array({0, 0}), Json::array({"1", 2})}))),
                    FormatError);
    CHECK_THROWS_AS(
        family_from_json(one_curve_file(Json::array({Json::array({0, 0}), Json::array({kMaxCoordinate + 1, 2})}))),
        CoordinateRangeError);
    CHECK_THROWS_AS(family_from_json(one_curve_file(Json::array({Json::array({0, 0, 1}), Json::array({0, 2})}))),
                    FormatError);
}

TEST_CASE("curves are capped at ten thousand vertices") {
    auto staircase = [](std::size_t n) {
        Json pts = Json::array();
        pts.push_back(Json::array({0, 0}));
        for (std::size_t i = 1; i < n; ++i) pts.push_back(Json::array({Coord((i + 1) / 2), Coord(i / 2 + 1)}));
        return pts;
    };
    CHECK_NOTHROW(family_from_json(one_curve_file(staircase(kMaxVerticesPerCurve))));
    CHECK_THROWS_AS(family_from_json(one_curve_file(staircase(kMaxVerticesPerCurve + 1))), FormatError);
}

TEST_CASE("malformed files") {
    CHECK_THROWS_AS(parse_json("{not json"), FormatError);
    CHECK_THROWS_AS(family_from_json(Json::array()), FormatError);
    CHECK_THROWS_AS(family_from_json(Json{{"kind", "even"}}), FormatError);
    CHECK_THROWS_AS(family_from_json(Json{{"curves", Json::array()}}), FormatError);
    CHECK_THROWS_AS(family_from_json(Json{{"kind", "spiral"}, {"curves", Json::array()}}), Error);
    CHECK_THROWS_AS(read_text(scratch() / "does-not-exist.json"), IoError);
}

TEST_CASE("colorings round trip in both layouts") {
    const auto inst = generate_burling(2);
    const Coloring c{{0, 1, 0}, 2};
    const Coloring back = coloring_from_json(coloring_to_json(inst.family, c), inst.family);
    CHECK(back.colors == c.colors);
    CHECK(back.palette == 2);
    const Coloring arr = coloring_from_json(Json{{"colors", {1, 0, 2}}}, inst.family);
    CHECK(arr.colors == std::vector<int>{1, 0, 2});
    CHECK(arr.palette == 3);
    CHECK_THROWS_AS(coloring_from_json(Json{{"colors", {1, 0}}}, inst.family), FormatError);
    CHECK_THROWS_AS(coloring_from_json(Json{{"colors", {{"x", 0}}}}, inst.family), FormatError);
}

TEST_CASE("files are written and read back verbatim") {
    const auto path = scratch() / "roundtrip.json";
    const auto inst = generate_burling(2);
    save_family(path, burling_to_json(inst));
    check_same(inst.family, load_family(path).family);
    CHECK(read_text(path) == dump_json(burling_to_json(inst)));
}
