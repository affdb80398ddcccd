#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charclass/report.hpp"

using charclass::Int;
using charclass::ReportDocument;
using charclass::StiefelParams;

TEST_CASE("report for W(5,2; 1,2)") {
    ReportDocument doc = charclass::make_report({5, 2, {1, 2}});
    CHECK(doc.schema_version == "1");
    CHECK(doc.classification.p1_coefficient == 24);
    CHECK(!doc.derivation.has_value());
    REQUIRE(doc.caveats.size() == 1);
    CHECK(doc.caveats[0].find("unknown, not refuted") != std::string::npos);

    const std::string golden =
        R"({"schema_version":"1","input":{"n":5,"k":2,"l":[1,2]},)"
        R"("dimension":15,"orientable":true,"parallelizable":false,)"
        R"("stably_parallelizable":false,"p1_coefficient":24,)"
        R"("w2_coefficient":0,"w2_possibly_nonzero":false,"span_cases":[],)"
        R"("cohomology_applicable":true,"caveats":["span vs stable span: no )"
        R"(sufficient condition applies; equality is unknown, not refuted"]})";
    CHECK(charclass::report_to_json(doc).dump() == golden);

    // serialization is deterministic
    CHECK(charclass::report_to_json(doc).dump(2) ==
          charclass::report_to_json(doc).dump(2));
}

TEST_CASE("round trip through JSON") {
    for (StiefelParams p : {StiefelParams{5, 2, {1, 2}},
                            StiefelParams{2, 1, {1}},
                            StiefelParams{4, 3, {2, 3, 5}},
                            StiefelParams{8, 6, {1, 2, 3, 4, 5, 7}}}) {
        ReportDocument doc = charclass::make_report(p);
        CHECK(charclass::report_from_json(charclass::report_to_json(doc)) == doc);

        ReportDocument explained = charclass::make_report(p, true);
        CHECK(charclass::report_from_json(charclass::report_to_json(explained)) ==
              explained);
    }
}

TEST_CASE("coefficients past 64 bits serialize as decimal strings") {
    Int big("1000000000000000");  // 10^15
    ReportDocument doc = charclass::make_report({5, 2, {1, big}});
    nlohmann::ordered_json j = charclass::report_to_json(doc);
    CHECK(j["p1_coefficient"].is_string());
    CHECK(j["input"]["l"][1].is_number_integer());
    CHECK(j["dimension"].is_number_integer());
    CHECK(charclass::report_from_json(j) == doc);

    // value check: 3(1 + 10^30) + (1 + 10^15)^2
    Int expected = 3 * (1 + big * big) + (1 + big) * (1 + big);
    CHECK(doc.classification.p1_coefficient == expected);
}

TEST_CASE("derivation steps trace the class computation") {
    ReportDocument doc = charclass::make_report({5, 2, {1, 2}}, true);
    REQUIRE(doc.derivation.has_value());
    REQUIRE(doc.derivation->size() == 5);

    const auto& steps = *doc.derivation;
    CHECK(steps[0].expression == "5*xi^-2 + 5*xi^-1");
    CHECK(steps[0].total_class == "1 - 15*c + 100*c^2");
    CHECK(steps[1].expression == "xi^-1 + 3*eps_R");
    CHECK(steps[1].total_class == "1 - c");
    CHECK(steps[2].expression == "5*xi^-2 + 4*xi^-1 - 3*eps_R");
    CHECK(steps[2].total_class == "1 - 14*c + 86*c^2");
    CHECK(steps[3].total_class == "1 + 24*c^2");
    CHECK(steps[4].total_class == "1");

    // the real trivial summands earn an extra caveat
    bool has_complex_part_caveat = false;
    for (const std::string& caveat : doc.caveats)
        if (caveat.find("complex part only") != std::string::npos)
            has_complex_part_caveat = true;
    CHECK(has_complex_part_caveat);
}

TEST_CASE("text rendering") {
    ReportDocument doc = charclass::make_report({5, 2, {1, 2}});
    std::string text = charclass::report_to_text(doc);
    CHECK(text.find("W(5,2; 1,2)") != std::string::npos);
    CHECK(text.find("dimension               15") != std::string::npos);
    CHECK(text.find("p1 coefficient          24") != std::string::npos);
    CHECK(text.find("parallelizable          no") != std::string::npos);
    CHECK(text.find("(no case applies)") != std::string::npos);

    ReportDocument spanful = charclass::make_report({4, 3, {2, 3, 5}});
    std::string spanful_text = charclass::report_to_text(spanful);
    CHECK(spanful_text.find("case 1") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    CHECK_THROWS(charclass::report_from_json(j));
}
