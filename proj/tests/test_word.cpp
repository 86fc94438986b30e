#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rqa/permutation.hpp"
#include "rqa/word.hpp"

using namespace rqa;

TEST_CASE("word_type counts starting and ending heights") {
    // a23 a14 a22 a41 a13
    Word w{{2, 3}, {1, 4}, {2, 2}, {4, 1}, {1, 3}};
    TypePair t = word_type(w, 4);
    CHECK(t.p == std::vector<long>{2, 2, 0, 1});
    CHECK(t.r == std::vector<long>{1, 1, 2, 1});

    TypePair empty = word_type(Word{}, 3);
    CHECK(empty.p == std::vector<long>{0, 0, 0});
    CHECK(empty.r == std::vector<long>{0, 0, 0});

    Word bal{{1, 2}, {2, 1}};
    TypePair tb = word_type(bal, 2);
    CHECK(tb.p == std::vector<long>{1, 1});
    CHECK(tb.r == std::vector<long>{1, 1});

    CHECK_THROWS_AS(word_type(w, 3), std::domain_error); // height 4 out of range
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(Word{{1, 2}, {2, 1}}));
    CHECK_FALSE(is_balanced(Word{{1, 2}}));
    CHECK_FALSE(is_balanced(Word{{2, 3}, {1, 4}, {2, 2}, {4, 1}, {1, 3}}));
    CHECK(is_balanced(Word{}));
}

TEST_CASE("inversions") {
    CHECK(inversions({1, 2, 3}) == 0);
    CHECK(inversions({2, 1, 2, 4, 1}) == 4);
    for (int m : {2, 3, 5, 7}) {
        std::vector<int> rev;
        for (int t = m; t >= 1; --t) rev.push_back(t);
        CHECK(inversions(rev) == m * (m - 1) / 2);
    }
    CHECK(inversions({}) == 0);
}

TEST_CASE("inv_alpha") {
    CHECK(inv_alpha(Word{{1, 1}, {2, 2}}) == 0);
    CHECK(inv_alpha(Word{{1, 2}, {2, 1}}) == 1);
    CHECK(inv_alpha(Word{{2, 1}, {1, 2}}) == -1);
}

TEST_CASE("type sums equal the length on random words") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> height(1, 4), len(0, 9);
    for (int rep = 0; rep < 200; ++rep) {
        Word w;
        int n = len(rng);
        for (int t = 0; t < n; ++t) w.steps.push_back({height(rng), height(rng)});
        TypePair tp = word_type(w, 4);
        long sp = 0, sr = 0;
        for (long x : tp.p) sp += x;
        for (long x : tp.r) sr += x;
        CHECK(sp == n);
        CHECK(sr == n);
    }
}

TEST_CASE("balanced word with sorted i-word: inv_alpha = inversions of j-word") {
    // i-word sorted means inv(i-word) = 0
    Word w{{1, 3}, {1, 1}, {2, 2}, {3, 1}};
    CHECK(inversions(w.i_word()) == 0);
    CHECK(inv_alpha(w) == inversions(w.j_word()));

    // random balanced words: sort steps by starting height, pair with a
    // shuffled copy of the same multiset of heights as ending heights
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> height(1, 4), len(1, 8);
    for (int rep = 0; rep < 100; ++rep) {
        int n = len(rng);
        std::vector<int> hs(n);
        for (int& h : hs) h = height(rng);
        std::vector<int> iw = hs, jw = hs;
        std::sort(iw.begin(), iw.end());
        std::shuffle(jw.begin(), jw.end(), rng);
        Word b;
        for (int t = 0; t < n; ++t) b.steps.push_back({iw[t], jw[t]});
        CHECK(is_balanced(b));
        CHECK(inv_alpha(b) == inversions(b.j_word()));
    }
}

TEST_CASE("relabel maps pi-ordered words to id-ordered words") {
    Permutation pi = Permutation::from_string("231");
    // ordered w.r.t. 231 means starting heights appear in the order 2, 3, 1
    Word w{{2, 2}, {3, 2}, {1, 2}, {1, 3}};
    Word rel = relabel(w, pi);
    Permutation inv = pi.inverse();
    for (std::size_t k = 0; k < w.size(); ++k) {
        CHECK(rel.steps[k].i == inv(w.steps[k].i));
        CHECK(rel.steps[k].j == inv(w.steps[k].j));
    }
    for (std::size_t k = 0; k + 1 < rel.size(); ++k)
        CHECK(rel.steps[k].i <= rel.steps[k + 1].i);
}

TEST_CASE("word text form round trip") {
    Word w{{2, 3}, {1, 4}};
    CHECK(to_string(w) == "a[2,3]a[1,4]");
    CHECK(parse_word("a[2,3]a[1,4]") == w);
    CHECK(to_string(Word{}) == "1");
    CHECK(parse_word("1") == Word{});
    CHECK(parse_word("a[12,3]").steps[0].i == 12);
    CHECK_THROWS_AS(parse_word("b[1,2]"), std::domain_error);
}

TEST_CASE("permutation basics") {
    Permutation p = Permutation::from_string("2341");
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    Permutation inv = p.inverse();
    CHECK(inv(2) == 1);
    CHECK(inv(1) == 4);
    CHECK(Permutation::all(3).size() == 6);
    CHECK(Permutation::all(3).front() == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::domain_error);
    CHECK(Permutation::from_string("321").inv_count() == 3);
}
