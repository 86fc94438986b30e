#pragma once

#include <map>
#include <string>

#include "rqa/rational.hpp"
#include "rqa/word.hpp"

namespace rqa {

// Degree-truncated noncommutative formal series: a sparse map from words to
// exact rational coefficients. Invariants: no stored zero coefficients, every
// stored word has length <= max_degree (inclusive).
class NcSeries {
public:
    explicit NcSeries(int max_degree = 0) : max_degree_(max_degree) {}

    static NcSeries zero(int max_degree) { return NcSeries(max_degree); }
    static NcSeries one(int max_degree);
    static NcSeries from_word(const Word& w, int max_degree, const Rational& coeff = Rational(1));

    int max_degree() const { return max_degree_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Word& w) const;
    void add_term(const Word& w, const Rational& coeff); // drops the word if it exceeds max_degree

    NcSeries& operator+=(const NcSeries& other);
    NcSeries& operator-=(const NcSeries& other);
    friend NcSeries operator+(NcSeries a, const NcSeries& b) { return a += b; }
    friend NcSeries operator-(NcSeries a, const NcSeries& b) { return a -= b; }
    friend NcSeries operator*(const NcSeries& a, const NcSeries& b); // truncates to min(max_degrees)
    friend NcSeries operator*(const Rational& c, NcSeries s);
    NcSeries operator-() const;

    // the part supported on words of length exactly n
    NcSeries homogeneous_component(int n) const;
    int top_degree() const; // largest stored word length, -1 if zero

    // same terms under a new truncation bound (words beyond it are dropped)
    NcSeries with_max_degree(int d) const;

    friend bool operator==(const NcSeries& a, const NcSeries& b) {
        return a.terms_ == b.terms_; // truncation degrees may differ
    }

    std::string str() const;

private:
    int max_degree_;
    std::map<Word, Rational> terms_;
};

} // namespace rqa
