// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "hecke/io.hpp"

using namespace hecke;

namespace {
LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }
} // namespace

TEST(LaurentJson, ExponentKeysInDecreasingOrder) {
    EXPECT_EQ(to_json(P("q^2+3*q-1")).dump(), R"({"2":"1/1","1":"3/1","0":"-1/1"})");
    EXPECT_EQ(to_json(P("1/2*q^-3")).dump(), R"({"-3":"1/2"})");
    EXPECT_EQ(to_json(LaurentPoly()).dump(), "{}");
}

TEST(LaurentJson, RoundTrip) {
    for (const char* text : {"q^3+2*q^2+3*q-2-q^-1", "0", "-3/4*q^-7+q^9", "5"}) {
        LaurentPoly p = P(text);
        EXPECT_EQ(laurent_from_json(Json::parse(to_json(p).dump())), p);
    }
    EXPECT_EQ(laurent_from_json(Json::parse(R"({"1":"2","0":"4/2"})")), P("2*q+2"));
    EXPECT_THROW(laurent_from_json(Json::parse("[1]")), ParseError);
    EXPECT_THROW(laurent_from_json(Json::parse(R"({"x":"1/1"})")), ParseError);
    EXPECT_THROW(laurent_from_json(Json::parse(R"({"1":"a"})")), ParseError);
}

TEST(RationalFunctionJson, Reduced) {
    RationalFunction r(P("q^2-1"), P("q-1"));
    EXPECT_EQ(to_json(r).dump(), R"({"numerator":{"1":"1/1","0":"1/1"},"denominator":{"0":"1/1"}})");
}

TEST(SeriesJson, Coefficients) {
    EXPECT_EQ(to_json(to_delta_series(LaurentPoly::q(), 2)).dump(), R"(["1/1","1/1","1/2"])");
}

TEST(CharacterTableIo, JsonGolden) {
    CharacterTable t = character_table(2);
    EXPECT_EQ(to_json(t).dump(),
              R"({"n":2,"rows":["[2]","[1,1]"],"columns":["[2]","[1,1]"],)"
              R"("entries":[[{"1":"1/1"},{"0":"1/1"}],[{"0":"-1/1"},{"0":"1/1"}]]})");
}

TEST(CharacterTableIo, CsvGolden) {
    EXPECT_EQ(to_csv(character_table(3)), "irrep,[3],\"[2,1]\",\"[1,1,1]\"\n"
                                          "[3],q^2,q,1\n"
                                          "\"[2,1]\",-q,q-1,2\n"
                                          "\"[1,1,1]\",1,-1,1\n");
}

TEST(ReportJson, CountsFailures) {
    VerificationReport r;
    r.add("first", true);
    r.add("second", false, "off by q");
    Json j = to_json(r);
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["total"], 2);
    EXPECT_EQ(j["failed"], 1);
    EXPECT_EQ(j["checks"][1]["identity"], "second");
    EXPECT_EQ(j["checks"][1]["detail"], "off by q");
}

TEST(RelationJson, Fields) {
    Json j = to_json(hecke_casimir_relation_check(Partition({1}), 2));
    EXPECT_EQ(j["holds"], true);
    EXPECT_EQ(j["lhs"].dump(), R"({"0":"1/1","-2":"-1/1"})");
}
