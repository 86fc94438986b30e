#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rqa/json_io.hpp"

using namespace rqa;

TEST_CASE("word json round trip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> height(1, 5), len(0, 8);
    for (int rep = 0; rep < 50; ++rep) {
        Word w;
        int n = len(rng);
        for (int t = 0; t < n; ++t) w.steps.push_back({height(rng), height(rng)});
        CHECK(word_from_json(word_to_json(w)) == w);
    }
    CHECK(word_to_json(Word{{2, 3}, {1, 4}}).dump() == "[[2,3],[1,4]]");
}

TEST_CASE("series json carries exact rationals") {
    NcSeries s(2);
    s.add_term(Word{{1, 2}}, rat(-7, 3));
    s.add_term(Word{}, Rational(2));
    Json j = series_to_json(s);
    REQUIRE(j.size() == 2);
    // map order: the empty word sorts first
    CHECK(j[0]["word"].dump() == "[]");
    CHECK(j[0]["num"] == "2");
    CHECK(j[0]["den"] == "1");
    CHECK(j[1]["num"] == "-7");
    CHECK(j[1]["den"] == "3");
}

TEST_CASE("query json round trip") {
    SequenceClassQuery q{{2, 1, 1}, {0, 3, 1}, Permutation::from_string("231"),
                         SequenceClass::BackPath};
    SequenceClassQuery back = query_from_json(query_to_json(q));
    CHECK(back.p == q.p);
    CHECK(back.r == q.r);
    CHECK(back.pi == q.pi);
    CHECK(back.cls == q.cls);
}

TEST_CASE("matrix json accepts integers and rational strings") {
    Json j = Json::parse(R"({"m": 2, "entries": [[2, "1/3"], [0, -5]]})");
    ScalarMatrix A = matrix_from_json(j);
    CHECK(A[0][0] == 2);
    CHECK(A[0][1] == rat(1, 3));
    CHECK(A[1][1] == -5);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"m": 2, "entries": [[1, 2]]})")),
                    std::domain_error);
}

TEST_CASE("master formula json names the minors") {
    ScalarMatrix A{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    MasterFormula F = eval_F(A, {-1, 1});
    Json j = master_formula_to_json(F);
    CHECK(j["delta"] == 1);
    CHECK(j["M"].dump() == "[1]");
    CHECK(j["minors"].contains("D"));
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["factors"][0]["den"] == "D_{1,1}");
}
