#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rqa/nc_series.hpp"

using namespace rqa;

namespace {

NcSeries random_series(std::mt19937& rng, int max_degree, int m, int nterms) {
    std::uniform_int_distribution<int> height(1, m), len(0, max_degree), coeff(-3, 3);
    NcSeries s(max_degree);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.steps.push_back({height(rng), height(rng)});
        s.add_term(w, Rational(coeff(rng)));
    }
    return s;
}

} // namespace

TEST_CASE("product with cancellation") {
    // (1 + a11)(1 - a11) = 1 - a11*a11 at max_degree 2
    NcSeries lhs = NcSeries::one(2) + NcSeries::from_word(Word{{1, 1}}, 2);
    NcSeries rhs = NcSeries::one(2) - NcSeries::from_word(Word{{1, 1}}, 2);
    NcSeries prod = lhs * rhs;
    NcSeries expect = NcSeries::one(2) - NcSeries::from_word(Word{{1, 1}, {1, 1}}, 2);
    CHECK(prod == expect);
    CHECK(prod.coefficient(Word{{1, 1}}) == 0);
}

TEST_CASE("single word product") {
    NcSeries a = NcSeries::from_word(Word{{1, 2}}, 3);
    NcSeries b = NcSeries::from_word(Word{{2, 1}}, 3);
    NcSeries prod = a * b;
    CHECK(prod.term_count() == 1);
    CHECK(prod.coefficient(Word{{1, 2}, {2, 1}}) == 1);
}

TEST_CASE("truncation drops overflowing words") {
    NcSeries a = NcSeries::from_word(Word{{1, 1}}, 2);
    NcSeries cube = a * a * a;
    CHECK(cube.is_zero());
    CHECK(cube.max_degree() == 2);
}

TEST_CASE("multiplication is associative and unital on random operands") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        NcSeries a = random_series(rng, 4, 2, 4);
        NcSeries b = random_series(rng, 4, 2, 4);
        NcSeries c = random_series(rng, 4, 2, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * NcSeries::one(4) == a);
        CHECK(NcSeries::one(4) * a == a);
        // bilinearity in the left factor
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("homogeneous_component") {
    NcSeries s(3);
    s.add_term(Word{}, Rational(5));
    s.add_term(Word{{1, 2}}, Rational(2));
    s.add_term(Word{{1, 2}, {2, 1}}, Rational(-1));
    NcSeries h2 = s.homogeneous_component(2);
    CHECK(h2.term_count() == 1);
    CHECK(h2.coefficient(Word{{1, 2}, {2, 1}}) == -1);
    CHECK(s.homogeneous_component(1).coefficient(Word{{1, 2}}) == 2);
    CHECK(s.homogeneous_component(3).is_zero());
    CHECK(s.top_degree() == 2);
}

TEST_CASE("no zero coefficients are stored") {
    NcSeries s(2);
    s.add_term(Word{{1, 1}}, Rational(1));
    s.add_term(Word{{1, 1}}, Rational(-1));
    CHECK(s.is_zero());
    CHECK(s.term_count() == 0);
}
