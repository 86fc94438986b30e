#pragma once

#include <vector>

#include "rqa/nc_series.hpp"
#include "rqa/permutation.hpp"
#include "rqa/rq_ideal.hpp"

namespace rqa {

// Square matrix of truncated noncommutative series, all sharing one truncation degree.
struct NcMatrix {
    int m = 0;
    int max_degree = 0;
    std::vector<std::vector<NcSeries>> entries;

    const NcSeries& at(int i, int j) const { return entries.at(i - 1).at(j - 1); }
    NcSeries& at(int i, int j) { return entries.at(i - 1).at(j - 1); }
};

// entry (i, j) is the single word a_{ij}
NcMatrix generic_matrix(int m, int max_degree);

// I - A
NcMatrix identity_minus(const NcMatrix& A);

// det B = sum_pi (-1)^{inv pi} b_{pi(1)1} b_{pi(2)2} ... b_{pi(m)m}:
// columns left to right, rows permuted. The entry type only needs +, *, unary -.
template <class Ring>
Ring det_column_ordered(const std::vector<std::vector<Ring>>& rows, const Ring& one) {
    int n = static_cast<int>(rows.size());
    if (n == 0) return one;
    Ring total = one - one; // zero of the ring
    for (const Permutation& pi : Permutation::all(n)) {
        Ring prod = rows[pi(1) - 1][0];
        for (int c = 2; c <= n; ++c) prod = prod * rows[pi(c) - 1][c - 1];
        if (pi.inv_count() % 2 != 0) prod = -prod;
        total = total + prod;
    }
    return total;
}

NcSeries determinant(const NcMatrix& B);

// determinant of B with the given rows/columns removed (1-based indices;
// remaining rows and columns kept in increasing order)
NcSeries minor_det(const NcMatrix& B, const std::vector<int>& rows_removed,
                   const std::vector<int>& cols_removed);

// sum over subsets J of [m] of (-1)^{|J|} det A_J; equals det(I - A) exactly
NcSeries det_subset_expansion(int m);

// the same sum arranged over permutations of subsets, weighted by (-1)^{cyc pi}
NcSeries det_cycle_expansion(int m);

// entries of 1/(I - A) as truncated Neumann sums: all lattice paths i -> j
NcMatrix neumann_matrix(int m, int max_degree);
NcSeries neumann_entry(int m, int i, int j, int max_degree);

// det(I-A) * c_{ij} - (-1)^{i+j} * det(I-A)^{ji} lies in the ideal
MembershipReport verify_matrix_inverse_report(int m, int i, int j, int max_degree,
                                              RelationSet rs = RelationSet::RightQuantum);
bool verify_matrix_inverse(int m, int i, int j, int max_degree,
                           RelationSet rs = RelationSet::RightQuantum);

// c_{ik} c_{jl} - c_{jk} c_{il} - c_{jl} c_{ik} + c_{il} c_{jk} lies in the ideal
MembershipReport verify_prop_inverse_relations_report(int m, int i, int j, int k, int l,
                                                      int max_degree,
                                                      RelationSet rs = RelationSet::RightQuantum);
bool verify_prop_inverse_relations(int m, int i, int j, int k, int l, int max_degree,
                                   RelationSet rs = RelationSet::RightQuantum);

// det(I-A) * det C_{I,J} - (-1)^{sum I + sum J} * det(I-A)^{J,I} lies in the
// ideal; C_{I,J} is the submatrix of Neumann entries (rows I, columns J, both
// sorted increasingly) and the clearing factor multiplies on the left
MembershipReport verify_jacobi_report(int m, const std::vector<int>& I,
                                      const std::vector<int>& J, int max_degree,
                                      RelationSet rs = RelationSet::RightQuantum);
bool verify_jacobi(int m, const std::vector<int>& I, const std::vector<int>& J,
                   int max_degree, RelationSet rs = RelationSet::RightQuantum);

// scalar image of a series under a_{ij} -> values[i-1][j-1] (commutative check)
Rational substitute_scalars(const NcSeries& s, const std::vector<std::vector<Rational>>& values);

} // namespace rqa
