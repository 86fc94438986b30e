#include "rqa/rq_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rqa {

NcMatrix generic_matrix(int m, int max_degree) {
    NcMatrix A{m, max_degree, {}};
    A.entries.assign(m, std::vector<NcSeries>(m, NcSeries(max_degree)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            A.at(i, j) = NcSeries::from_word(Word{{i, j}}, max_degree);
    return A;
}

NcMatrix identity_minus(const NcMatrix& A) {
    NcMatrix B{A.m, A.max_degree, {}};
    B.entries.assign(A.m, std::vector<NcSeries>(A.m, NcSeries(A.max_degree)));
    for (int i = 1; i <= A.m; ++i)
        for (int j = 1; j <= A.m; ++j) {
            NcSeries e = -A.at(i, j);
            if (i == j) e += NcSeries::one(A.max_degree);
            B.at(i, j) = std::move(e);
        }
    return B;
}

NcSeries determinant(const NcMatrix& B) {
    return det_column_ordered(B.entries, NcSeries::one(B.max_degree));
}

namespace {

std::vector<int> complement_sorted(int m, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    std::vector<int> kept;
    for (int t = 1; t <= m; ++t)
        if (!std::binary_search(removed.begin(), removed.end(), t)) kept.push_back(t);
    return kept;
}

} // namespace

NcSeries minor_det(const NcMatrix& B, const std::vector<int>& rows_removed,
                   const std::vector<int>& cols_removed) {
    if (rows_removed.size() != cols_removed.size())
        throw std::domain_error("minor_det: row and column sets must have equal size");
    std::vector<int> rows = complement_sorted(B.m, rows_removed);
    std::vector<int> cols = complement_sorted(B.m, cols_removed);
    std::vector<std::vector<NcSeries>> sub;
    sub.reserve(rows.size());
    for (int r : rows) {
        std::vector<NcSeries> line;
        line.reserve(cols.size());
        for (int c : cols) line.push_back(B.at(r, c));
        sub.push_back(std::move(line));
    }
    return det_column_ordered(sub, NcSeries::one(B.max_degree));
}

NcSeries det_subset_expansion(int m) {
    NcMatrix A = generic_matrix(m, m);
    NcSeries total(m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> kept;
        for (int t = 0; t < m; ++t)
            if (mask & (1u << t)) kept.push_back(t + 1);
        std::vector<std::vector<NcSeries>> sub;
        for (int r : kept) {
            std::vector<NcSeries> line;
            for (int c : kept) line.push_back(A.at(r, c));
            sub.push_back(std::move(line));
        }
        NcSeries d = det_column_ordered(sub, NcSeries::one(m));
        if (kept.size() % 2 != 0) d = -d;
        total += d;
    }
    return total;
}

NcSeries det_cycle_expansion(int m) {
    NcSeries total(m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> kept;
        for (int t = 0; t < m; ++t)
            if (mask & (1u << t)) kept.push_back(t + 1);
        int k = static_cast<int>(kept.size());
        if (k == 0) {
            total += NcSeries::one(m);
            continue;
        }
        // permutations of the subset as images kept[t] -> kept[perm[t]]
        std::vector<int> perm(k);
        for (int t = 0; t < k; ++t) perm[t] = t;
        do {
            // cycle count of the permutation
            std::vector<bool> seen(k, false);
            int cycles = 0;
            for (int t = 0; t < k; ++t) {
                if (seen[t]) continue;
                ++cycles;
                for (int u = t; !seen[u]; u = perm[u]) seen[u] = true;
            }
            Word w;
            for (int t = 0; t < k; ++t) w.steps.push_back({kept[perm[t]], kept[t]});
            total.add_term(w, cycles % 2 == 0 ? Rational(1) : Rational(-1));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return total;
}

NcMatrix neumann_matrix(int m, int max_degree) {
    NcMatrix A = generic_matrix(m, max_degree);
    NcMatrix sum{m, max_degree, {}};
    sum.entries.assign(m, std::vector<NcSeries>(m, NcSeries(max_degree)));
    NcMatrix power = sum;
    for (int i = 1; i <= m; ++i) {
        sum.at(i, i) = NcSeries::one(max_degree);
        power.at(i, i) = NcSeries::one(max_degree);
    }
    for (int n = 1; n <= max_degree; ++n) {
        NcMatrix next{m, max_degree, {}};
        next.entries.assign(m, std::vector<NcSeries>(m, NcSeries(max_degree)));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                NcSeries acc(max_degree);
                for (int k = 1; k <= m; ++k) acc += power.at(i, k) * A.at(k, j);
                next.at(i, j) = std::move(acc);
            }
        power = std::move(next);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) sum.at(i, j) += power.at(i, j);
    }
    return sum;
}

NcSeries neumann_entry(int m, int i, int j, int max_degree) {
    if (i < 1 || i > m || j < 1 || j > m)
        throw std::domain_error("neumann_entry: index out of range");
    return neumann_matrix(m, max_degree).at(i, j);
}

MembershipReport verify_matrix_inverse_report(int m, int i, int j, int max_degree,
                                              RelationSet rs) {
    NcMatrix IA = identity_minus(generic_matrix(m, max_degree));
    NcMatrix C = neumann_matrix(m, max_degree);
    NcSeries lhs = determinant(IA) * C.at(i, j);
    NcSeries rhs = minor_det(IA, {j}, {i});
    if ((i + j) % 2 != 0) rhs = -rhs;
    return ideal_contains_report(lhs - rhs, m, rs);
}

bool verify_matrix_inverse(int m, int i, int j, int max_degree, RelationSet rs) {
    return verify_matrix_inverse_report(m, i, j, max_degree, rs).contained;
}

MembershipReport verify_prop_inverse_relations_report(int m, int i, int j, int k, int l,
                                                      int max_degree, RelationSet rs) {
    NcMatrix C = neumann_matrix(m, max_degree);
    NcSeries residue = C.at(i, k) * C.at(j, l) - C.at(j, k) * C.at(i, l) -
                       C.at(j, l) * C.at(i, k) + C.at(i, l) * C.at(j, k);
    return ideal_contains_report(residue, m, rs);
}

bool verify_prop_inverse_relations(int m, int i, int j, int k, int l, int max_degree,
                                   RelationSet rs) {
    return verify_prop_inverse_relations_report(m, i, j, k, l, max_degree, rs).contained;
}

MembershipReport verify_jacobi_report(int m, const std::vector<int>& I,
                                      const std::vector<int>& J, int max_degree,
                                      RelationSet rs) {
    if (I.size() != J.size())
        throw std::domain_error("verify_jacobi: index sets must have equal size");
    std::vector<int> rows = I, cols = J;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    NcMatrix C = neumann_matrix(m, max_degree);
    std::vector<std::vector<NcSeries>> sub;
    for (int r : rows) {
        std::vector<NcSeries> line;
        for (int c : cols) line.push_back(C.at(r, c));
        sub.push_back(std::move(line));
    }
    NcSeries detC = det_column_ordered(sub, NcSeries::one(max_degree));
    NcMatrix IA = identity_minus(generic_matrix(m, max_degree));
    NcSeries lhs = determinant(IA) * detC;
    NcSeries rhs = minor_det(IA, cols, rows); // rows J and columns I removed
    long s = 0;
    for (int t : rows) s += t;
    for (int t : cols) s += t;
    if (s % 2 != 0) rhs = -rhs;
    return ideal_contains_report(lhs - rhs, m, rs);
}

bool verify_jacobi(int m, const std::vector<int>& I, const std::vector<int>& J,
                   int max_degree, RelationSet rs) {
    return verify_jacobi_report(m, I, J, max_degree, rs).contained;
}

Rational substitute_scalars(const NcSeries& s,
                            const std::vector<std::vector<Rational>>& values) {
    Rational total(0);
    for (const auto& [w, c] : s.terms()) {
        Rational prod = c;
        for (const Step& st : w.steps) prod *= values.at(st.i - 1).at(st.j - 1);
        total += prod;
    }
    return total;
}

} // namespace rqa
