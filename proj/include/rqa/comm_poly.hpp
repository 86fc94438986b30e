#pragma once

#include <map>
#include <string>
#include <vector>

#include "rqa/rational.hpp"

namespace rqa {

// exponent vector over commuting variables x_1..x_m
using Monomial = std::vector<unsigned>;

long total_degree(const Monomial& e);

// Multivariate polynomial in commuting variables over exact rationals.
// Sparse map exponent vector -> coefficient, no stored zeros.
class CommPoly {
public:
    explicit CommPoly(int nvars = 0) : nvars_(nvars) {}

    static CommPoly constant(const Rational& c, int nvars);
    static CommPoly variable(int k, int nvars); // x_k, 1-based

    int nvars() const { return nvars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& e) const;
    Rational constant_term() const;
    void add_term(const Monomial& e, const Rational& c);
    long degree() const; // max total degree, -1 if zero

    CommPoly& operator+=(const CommPoly& other);
    CommPoly& operator-=(const CommPoly& other);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const Rational& c, CommPoly p);
    CommPoly operator-() const;

    // product with all monomials of total degree > max_total_degree dropped
    CommPoly mul_truncated(const CommPoly& other, long max_total_degree) const;
    CommPoly truncated(long max_total_degree) const;

    Rational eval(const std::vector<Rational>& point) const;

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

// Power-series quotient num/den through the given total degree.
// Throws std::domain_error if den has zero constant term.
CommPoly series_div(const CommPoly& num, const CommPoly& den, long max_total_degree);

// Numerator/denominator pair of CommPoly. No gcd cancellation is ever
// performed; equality is decided by cross-multiplication.
struct RationalFn {
    CommPoly num;
    CommPoly den;

    RationalFn() = default;
    RationalFn(CommPoly n, CommPoly d) : num(std::move(n)), den(std::move(d)) {}

    static RationalFn from_poly(CommPoly p) {
        int nv = p.nvars();
        return RationalFn(std::move(p), CommPoly::constant(Rational(1), nv));
    }

    RationalFn operator*(const RationalFn& o) const { return {num * o.num, den * o.den}; }
    RationalFn operator+(const RationalFn& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }

    bool equivalent(const RationalFn& o) const { return num * o.den == o.num * den; }
};

// Coefficient of x^e in the power-series expansion of f at the origin.
Rational series_coefficient(const RationalFn& f, const Monomial& e);

} // namespace rqa
