#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "flseq/report.hpp"

using flseq::Character;
using flseq::Error;
using flseq::ErrorCode;
using flseq::Family;
using flseq::Field;
using flseq::MoebiusMap;
using flseq::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::BadInput;
}

Family small_family(const Field& f) {
    MoebiusMap psi = flseq::find_psi(f);
    Character chi = Character::by_order(f, 2);
    flseq::PhiStrategy strategy;  // coset-distinct
    return flseq::build_family(flseq::select_phis(f, strategy, psi), psi, chi);
}

}  // namespace

TEST_CASE("field JSON round-trip") {
    Field f(3, 2);
    json j = flseq::field_to_json(f);
    CHECK(j["p"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["modulus"] == json::array({1, 0, 1}));
    CHECK(j["generator"] == json::array({1, 1}));
    auto restored = flseq::field_from_json(j);
    CHECK(restored->size() == 9);
    CHECK(restored->modulus() == f.modulus());
}

TEST_CASE("field JSON validation") {
    CHECK(code_of([] { flseq::field_from_json(json::parse(R"({"p": 3})")); }) ==
          ErrorCode::BadInput);
    CHECK(code_of([] {
              flseq::field_from_json(json::parse(R"({"p": 4, "m": 1})"));
          }) == ErrorCode::NotPrime);
    // A stored generator that contradicts the deterministic choice.
    CHECK(code_of([] {
              flseq::field_from_json(
                  json::parse(R"({"p": 5, "m": 1, "generator": [3]})"));
          }) == ErrorCode::BadInput);
}

TEST_CASE("map JSON round-trip") {
    Field f(5, 1);
    MoebiusMap g(f.element({2}), f.element({3}), f.element({1}), f.element({1}));
    json j = flseq::map_to_json(g);
    // Canonical form scales (2,3,1,1) by inv(2) = 3 to (1,4,3,3).
    CHECK(j == json::array({{1}, {4}, {3}, {3}}));
    CHECK(flseq::map_from_json(j, f) == g);
    CHECK(code_of([&] { flseq::map_from_json(json::array({{1}, {0}}), f); }) ==
          ErrorCode::BadInput);
}

TEST_CASE("character JSON") {
    Field f(7, 1);
    Character chi = Character::by_order(f, 2);
    json j = flseq::character_to_json(chi);
    CHECK(j["index"] == 3);
    CHECK(j["order"] == 2);
    Character restored = flseq::character_from_json(j, f);
    CHECK(restored.index() == 3);
    json wrong = j;
    wrong["order"] = 3;
    CHECK(code_of([&] { flseq::character_from_json(wrong, f); }) ==
          ErrorCode::BadInput);
}

TEST_CASE("family JSON round-trip preserves every entry") {
    Field f(7, 1);
    Family fam = small_family(f);
    json j = flseq::family_to_json(fam);
    CHECK(j["members"].size() == fam.size());

    flseq::LoadedFamily loaded = flseq::family_from_json(j);
    REQUIRE(loaded.family.size() == fam.size());
    for (size_t i = 0; i < fam.size(); ++i)
        CHECK(loaded.family.members[i].same_entries(fam.members[i]));
    CHECK(loaded.field->size() == 7);
}

TEST_CASE("family JSON validation") {
    Field f(3, 1);
    Family fam = small_family(f);
    json good = flseq::family_to_json(fam);

    json no_members = good;
    no_members.erase("members");
    CHECK(code_of([&] { flseq::family_from_json(no_members); }) == ErrorCode::BadInput);

    json bad_exponent = good;
    bad_exponent["members"][0]["entries"][0] = 9;  // >= q - 1 = 2
    CHECK(code_of([&] { flseq::family_from_json(bad_exponent); }) ==
          ErrorCode::BadInput);

    json short_member = good;
    short_member["members"][0]["entries"] = json::array({0, 0});
    CHECK(code_of([&] { flseq::family_from_json(short_member); }) ==
          ErrorCode::BadInput);

    json empty_members = good;
    empty_members["members"] = json::array();
    CHECK(code_of([&] { flseq::family_from_json(empty_members); }) ==
          ErrorCode::BadInput);
}

TEST_CASE("family CSV rows are exponent integers") {
    Field f(3, 1);
    MoebiusMap psi(f.element({1}), f.element({1}), f.element({2}), f.element({1}));
    Character chi = Character::by_order(f, 2);
    Family fam = flseq::build_family({MoebiusMap::identity(f)}, psi, chi);
    CHECK(flseq::family_to_csv(fam) == "0,0,1,0\n");
}

TEST_CASE("file I/O errors") {
    CHECK(code_of([] { flseq::load_json_file("/nonexistent/nowhere.json"); }) ==
          ErrorCode::IoError);
    CHECK(code_of([] {
              flseq::write_text_file("/nonexistent-dir/out.txt", "x");
          }) == ErrorCode::IoError);

    auto dir = std::filesystem::temp_directory_path();
    auto bad = dir / "flseq_bad.json";
    flseq::write_text_file(bad.string(), "{ not json");
    CHECK(code_of([&] { flseq::load_json_file(bad.string()); }) == ErrorCode::BadInput);
    std::filesystem::remove(bad);
}

TEST_CASE("psi report shape") {
    Field f(3, 1);
    json j = flseq::psi_report(f);
    CHECK(j["order"] == 4);
    CHECK(j["orbit"].size() == 4);
    CHECK(j["field"]["p"] == 3);
    // q = 3: psi = (0,1,1,1), orbit 1 -> 2 -> inf -> 0.
    CHECK(j["psi"] == json::array({{0}, {1}, {1}, {1}}));
    CHECK(j["orbit"][0] == json::array({1}));
    CHECK(j["orbit"][2] == json("inf"));
}

TEST_CASE("correlate report shape") {
    Field f(3, 1);
    Family fam = small_family(f);
    json j = flseq::correlate_report(fam, true);
    CHECK(j["N"] == 4);
    CHECK(j["M"] == 6);
    REQUIRE(j["members"].size() == 6);
    for (const auto& member : j["members"]) {
        CHECK(member["T0"] == 4.0);
        CHECK(member["spectrum"].size() == 4);
    }
    CHECK(j["family"].contains("TA"));
    CHECK(j["pairs"].size() == 30);  // 6 * 5 ordered pairs

    json no_pairs = flseq::correlate_report(fam, false);
    CHECK(!no_pairs.contains("pairs"));
}

TEST_CASE("correlate CSV has one row per member and shift") {
    Field f(3, 1);
    Family fam = small_family(f);
    std::string csv = flseq::correlate_csv(fam);
    size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 1 + 6 * 4);  // header + M*N
    CHECK(csv.rfind("member,s,re,im,abs\n", 0) == 0);
}

TEST_CASE("bounds report carries the measured comparison") {
    json j = flseq::bounds_report(4, 2, 1.6);
    CHECK(j["N"] == 4);
    CHECK(j["welch"].get<double>() == doctest::Approx(1.511858).epsilon(1e-6));
    CHECK(j["measured"] == 1.6);
    CHECK(j["consistent"] == true);
    CHECK(j.contains("simplified_applicability"));

    json no_measured = flseq::bounds_report(4, 2, std::nullopt);
    CHECK(!no_measured.contains("measured"));

    json inconsistent = flseq::bounds_report(4, 2, 1.0);
    CHECK(inconsistent["consistent"] == false);
}

TEST_CASE("kerdock report") {
    json j = flseq::kerdock_report(4);
    CHECK(j["n"] == 16);
    CHECK(j["d"] == 6);
    CHECK(j["size"] == 256);
    CHECK(j["antipodal_bound"]["num"] == 256);
    CHECK(j["antipodal_bound"]["den"] == 1);
    CHECK(j["meets"] == true);
}

TEST_CASE("linspan report") {
    Field f(3, 1);
    Family fam = small_family(f);
    json j = flseq::linspan_report(fam, 2);
    CHECK(j["periods"] == 2);
    REQUIRE(j["members"].size() == 6);
    for (const auto& member : j["members"]) {
        CHECK(member["modulus"] == 2);
        CHECK(member["span"].get<size_t>() >= 1);
    }
}

TEST_CASE("full report pipeline") {
    flseq::RunConfig config = flseq::RunConfig::from_q(7);
    config.char_order = 2;
    json j = flseq::full_report(config);
    CHECK(j["config"]["q"] == 7);
    CHECK(j["config"]["phis"] == "coset-distinct");
    CHECK(j["family"]["members"].size() == 42);  // q(q-1)
    CHECK(j["correlation"]["N"] == 8);
    CHECK(j["bounds"].contains("measured"));
    CHECK(j["bounds"]["consistent"] == true);
    CHECK(j["linear_span"]["members"].size() == 42);

    // Composite character order: linear span is declined, not faked.
    flseq::RunConfig c4 = flseq::RunConfig::from_q(13);
    c4.char_order = 4;
    json j4 = flseq::full_report(c4);
    CHECK(j4["linear_span"].is_null());
    CHECK(j4.contains("linear_span_note"));
}

TEST_CASE("report numbers serialize with full precision") {
    json j = flseq::bounds_report(7, 3, std::nullopt);
    std::string text = j.dump();
    // 7*sqrt(2/20) = 2.2135943621178655; at least 12 significant digits must
    // survive serialization.
    CHECK(text.find("2.213594362117") != std::string::npos);
}
