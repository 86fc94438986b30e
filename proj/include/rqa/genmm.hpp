#pragma once

#include <map>
#include <string>
#include <vector>

#include "rqa/comm_poly.hpp"
#include "rqa/nc_series.hpp"
#include "rqa/rational.hpp"

namespace rqa {

// Data derived from an integer vector d with sum 0: the multiset M of heights
// with d_i < 0 (each i appearing -d_i times), the nondecreasing tuple N of
// heights with d_i > 0 (each appearing d_i times), their common size delta and
// element sums.
struct DeltaPlan {
    std::vector<long> d;
    std::vector<int> M; // sorted multiset
    std::vector<int> N; // sorted tuple (N_1, ..., N_delta)
    int delta = 0;
    long M_sum = 0;
    long N_sum = 0;
};

// Throws std::domain_error unless sum(d) = 0.
DeltaPlan plan(const std::vector<long>& d);

// Per permutation pi of the multiset M: the growing sets I^k = {pi_1..pi_k},
// the column sets J^k = (I^k \ {pi_k}) U {N_k}, and the interval counts
// eps^k = |I^{k-1} /\ (open interval between pi_k and N_k)|.
struct PermutationPlan {
    std::vector<int> pi;
    std::vector<std::vector<int>> I_sets;
    std::vector<std::vector<int>> J_sets;
    std::vector<int> eps;
};

// One plan per element of S(M), in lexicographic order.
std::vector<PermutationPlan> permutation_plans(const DeltaPlan& dp);

using ScalarMatrix = std::vector<std::vector<Rational>>;
using CommMatrix = std::vector<std::vector<CommPoly>>;

// entries of I - XA with X = diag(x_1..x_m): delta_ij - x_i a_ij
CommMatrix i_minus_xa(const ScalarMatrix& A);

// determinant of M with rows/cols removed (1-based, kept indices in increasing order)
CommPoly comm_minor(const CommMatrix& M, int nvars, const std::vector<int>& rows_removed,
                    const std::vector<int>& cols_removed);

// a minor det(I-XA)^{rows,cols}, identified by the removed index sets
struct MinorKey {
    std::vector<int> rows_removed;
    std::vector<int> cols_removed;
    friend auto operator<=>(const MinorKey&, const MinorKey&) = default;
};

std::string minor_name(const MinorKey& k); // "D", "D_{2,1}", "D_{24,34}", ...

struct MinorRatioFactor {
    int sign = 1; // (-1)^{eps}
    MinorKey num;
    MinorKey den;
};

struct MasterTerm {
    std::vector<MinorRatioFactor> factors; // k = 1..delta, left to right
};

// The evaluated right-hand side of the master formula:
//   (-1)^{M+N} / det(I-XA) * sum over pi of prod_k (-1)^{eps_k} D^{I_k,J_k} / D^{I_k,I_k}
// kept as a sum of signed products of minor ratios; every referenced minor is
// computed once into the table.
struct MasterFormula {
    int m = 0;
    std::vector<long> d;
    DeltaPlan delta_plan;
    std::vector<PermutationPlan> plans;
    int prefactor_sign = 1;
    std::vector<MasterTerm> terms;
    std::map<MinorKey, CommPoly> minors; // includes the full determinant under key {{},{}}

    const CommPoly& minor(const MinorKey& k) const { return minors.at(k); }
    const CommPoly& master_den() const { return minors.at(MinorKey{}); }

    // exact power-series expansion through the given total degree
    CommPoly series(long max_total_degree) const;
    Rational series_coefficient(const Monomial& e) const;

    // single fraction over the common denominator (minors raised to their
    // maximal multiplicity across terms); no gcd cancellation
    RationalFn to_rational_fn() const;
};

MasterFormula eval_F(const ScalarMatrix& A, const std::vector<long>& d);

// G(p;r) = [x^r] prod_{i, p_i factors each, rows in increasing order} (a_i1 x_1 + ... + a_im x_m)
Rational coefficient_G(const ScalarMatrix& A, const std::vector<long>& p,
                       const std::vector<long>& r);

// the same coefficient for a matrix of noncommutative series: the product of
// the chosen entries in row order, summed over all ways to pick column j_t
// for each factor so that the columns have type r
NcSeries coefficient_G_nc(const std::vector<std::vector<NcSeries>>& entries,
                          const std::vector<long>& p, const std::vector<long>& r);

// the generic-matrix instance of the above: the coefficient is a sum of
// words, equal to the ordered-class sum O(p;r)
NcSeries coefficient_G_generic(int m, const std::vector<long>& p, const std::vector<long>& r);

// sum over p = r + d, sum(p) <= max_total_degree, of G(p;r) x^p
CommPoly eval_F_series(const ScalarMatrix& A, const std::vector<long>& d,
                       long max_total_degree);

// check eval_F against eval_F_series coefficient by coefficient
bool cross_check_series(const ScalarMatrix& A, const std::vector<long>& d,
                        long max_total_degree);

// alternating binomial triple sums
struct DixonS {
    Integer brute;  // sum_{i=1}^{n-1} (-1)^i C(n,i-1) C(n,i) C(n,i+1)
    Integer closed; // 0 for odd n, 2 (-1)^m C(2m,m-1) C(3m,m-1) for n = 2m
    bool match = false;
};
DixonS dixon_S(long n);

struct DixonSk {
    Integer brute;     // sum_{i=k}^{n-k} (-1)^i C(n,i-k) C(n,i) C(n,i+k)
    Integer factorial_form; // the factorial-ratio closed form (0 for odd n)
    Integer double_sum;     // the double-sum closed form (k >= 1; repeats the
                            // factorial form when k = 0)
    bool match = false;
};
DixonSk dixon_Sk(long n, long k);

} // namespace rqa
