#include "rqa/genmm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rqa/rq_linalg.hpp"

namespace rqa {

DeltaPlan plan(const std::vector<long>& d) {
    long sum = std::accumulate(d.begin(), d.end(), 0L);
    if (sum != 0) throw std::domain_error("plan: entries of d must sum to 0");
    DeltaPlan dp;
    dp.d = d;
    for (std::size_t t = 0; t < d.size(); ++t) {
        int height = static_cast<int>(t + 1);
        if (d[t] < 0) dp.M.insert(dp.M.end(), static_cast<std::size_t>(-d[t]), height);
        if (d[t] > 0) dp.N.insert(dp.N.end(), static_cast<std::size_t>(d[t]), height);
    }
    dp.delta = static_cast<int>(dp.M.size());
    dp.M_sum = std::accumulate(dp.M.begin(), dp.M.end(), 0L);
    dp.N_sum = std::accumulate(dp.N.begin(), dp.N.end(), 0L);
    return dp;
}

std::vector<PermutationPlan> permutation_plans(const DeltaPlan& dp) {
    std::vector<PermutationPlan> out;
    std::vector<int> pi = dp.M; // sorted, so next_permutation walks S(M) in lex order
    if (pi.empty()) return out;
    do {
        PermutationPlan pp;
        pp.pi = pi;
        std::set<int> cur;
        for (int k = 1; k <= dp.delta; ++k) {
            int pik = pi[k - 1];
            int Nk = dp.N[k - 1];
            int lo = std::min(pik, Nk), hi = std::max(pik, Nk);
            int eps = 0;
            for (int t : cur)
                if (lo < t && t < hi) ++eps;
            pp.eps.push_back(eps);
            cur.insert(pik);
            pp.I_sets.emplace_back(cur.begin(), cur.end());
            std::set<int> J = cur;
            J.erase(pik);
            J.insert(Nk);
            pp.J_sets.emplace_back(J.begin(), J.end());
        }
        out.push_back(std::move(pp));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

CommMatrix i_minus_xa(const ScalarMatrix& A) {
    int m = static_cast<int>(A.size());
    CommMatrix M(m, std::vector<CommPoly>(m, CommPoly(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            CommPoly e(m);
            if (i == j) e += CommPoly::constant(Rational(1), m);
            Monomial xi(m, 0);
            xi[i] = 1;
            e.add_term(xi, -A[i][j]);
            M[i][j] = std::move(e);
        }
    }
    return M;
}

CommPoly comm_minor(const CommMatrix& M, int nvars, const std::vector<int>& rows_removed,
                    const std::vector<int>& cols_removed) {
    if (rows_removed.size() != cols_removed.size())
        throw std::domain_error("comm_minor: row and column sets must have equal size");
    int m = static_cast<int>(M.size());
    auto kept = [m](std::vector<int> removed) {
        std::sort(removed.begin(), removed.end());
        std::vector<int> k;
        for (int t = 1; t <= m; ++t)
            if (!std::binary_search(removed.begin(), removed.end(), t)) k.push_back(t);
        return k;
    };
    std::vector<int> rows = kept(rows_removed), cols = kept(cols_removed);
    std::vector<std::vector<CommPoly>> sub;
    for (int r : rows) {
        std::vector<CommPoly> line;
        for (int c : cols) line.push_back(M[r - 1][c - 1]);
        sub.push_back(std::move(line));
    }
    return det_column_ordered(sub, CommPoly::constant(Rational(1), nvars));
}

std::string minor_name(const MinorKey& k) {
    if (k.rows_removed.empty() && k.cols_removed.empty()) return "D";
    std::ostringstream os;
    os << "D_{";
    for (int t : k.rows_removed) os << t;
    os << ",";
    for (int t : k.cols_removed) os << t;
    os << "}";
    return os.str();
}

MasterFormula eval_F(const ScalarMatrix& A, const std::vector<long>& d) {
    int m = static_cast<int>(A.size());
    if (d.size() != A.size()) throw std::domain_error("eval_F: d and A sizes differ");
    MasterFormula F;
    F.m = m;
    F.d = d;
    F.delta_plan = plan(d);
    F.plans = permutation_plans(F.delta_plan);
    F.prefactor_sign = (F.delta_plan.M_sum + F.delta_plan.N_sum) % 2 == 0 ? 1 : -1;

    CommMatrix IXA = i_minus_xa(A);
    auto minor_of = [&](const MinorKey& key) {
        if (!F.minors.count(key))
            F.minors.emplace(key, comm_minor(IXA, m, key.rows_removed, key.cols_removed));
    };
    minor_of(MinorKey{});
    for (const PermutationPlan& pp : F.plans) {
        MasterTerm term;
        for (int k = 0; k < F.delta_plan.delta; ++k) {
            MinorRatioFactor f;
            f.sign = pp.eps[k] % 2 == 0 ? 1 : -1;
            f.num = MinorKey{pp.I_sets[k], pp.J_sets[k]};
            f.den = MinorKey{pp.I_sets[k], pp.I_sets[k]};
            minor_of(f.num);
            minor_of(f.den);
            term.factors.push_back(std::move(f));
        }
        F.terms.push_back(std::move(term));
    }
    return F;
}

CommPoly MasterFormula::series(long max_total_degree) const {
    CommPoly total(m);
    if (terms.empty()) {
        total = series_div(CommPoly::constant(Rational(prefactor_sign), m), master_den(),
                           max_total_degree);
        return total;
    }
    for (const MasterTerm& term : terms) {
        CommPoly num = CommPoly::constant(Rational(prefactor_sign), m);
        CommPoly den = master_den();
        for (const MinorRatioFactor& f : term.factors) {
            num = Rational(f.sign) * (num * minor(f.num));
            den = den * minor(f.den);
        }
        total += series_div(num, den, max_total_degree);
    }
    return total;
}

Rational MasterFormula::series_coefficient(const Monomial& e) const {
    return series(total_degree(e)).coefficient(e);
}

RationalFn MasterFormula::to_rational_fn() const {
    if (terms.empty()) {
        return RationalFn(CommPoly::constant(Rational(prefactor_sign), m), master_den());
    }
    // common denominator: D times each denominator minor raised to its maximal
    // multiplicity over the terms
    std::map<MinorKey, int> max_mult;
    std::vector<std::map<MinorKey, int>> term_mult(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
        for (const MinorRatioFactor& f : terms[t].factors) ++term_mult[t][f.den];
        for (const auto& [key, mult] : term_mult[t])
            max_mult[key] = std::max(max_mult[key], mult);
    }
    CommPoly den = master_den();
    for (const auto& [key, mult] : max_mult)
        for (int rep = 0; rep < mult; ++rep) den = den * minor(key);
    CommPoly num(m);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        CommPoly part = CommPoly::constant(Rational(prefactor_sign), m);
        for (const MinorRatioFactor& f : terms[t].factors)
            part = Rational(f.sign) * (part * minor(f.num));
        for (const auto& [key, mult] : max_mult) {
            int deficit = mult - (term_mult[t].count(key) ? term_mult[t][key] : 0);
            for (int rep = 0; rep < deficit; ++rep) part = part * minor(key);
        }
        num += part;
    }
    return RationalFn(std::move(num), std::move(den));
}

Rational coefficient_G(const ScalarMatrix& A, const std::vector<long>& p,
                       const std::vector<long>& r) {
    long sp = std::accumulate(p.begin(), p.end(), 0L);
    long sr = std::accumulate(r.begin(), r.end(), 0L);
    if (sp != sr) throw std::domain_error("coefficient_G: sum(p) != sum(r)");
    int m = static_cast<int>(A.size());
    CommPoly prod = CommPoly::constant(Rational(1), m);
    for (int i = 0; i < m; ++i) {
        CommPoly row(m);
        for (int j = 0; j < m; ++j) {
            Monomial e(m, 0);
            e[j] = 1;
            row.add_term(e, A[i][j]);
        }
        for (long rep = 0; rep < p[i]; ++rep) prod = prod.mul_truncated(row, sp);
    }
    Monomial e(m, 0);
    for (int j = 0; j < m; ++j) e[j] = static_cast<unsigned>(r[j]);
    return prod.coefficient(e);
}

namespace {

void expand_generic(int m, const std::vector<long>& rows, std::size_t pos, Word& w,
                    std::vector<long>& remaining, NcSeries& out) {
    if (pos == rows.size()) {
        out.add_term(w, Rational(1));
        return;
    }
    int i = static_cast<int>(rows[pos]);
    for (int j = 1; j <= m; ++j) {
        if (remaining[j - 1] == 0) continue;
        --remaining[j - 1];
        w.steps.push_back({i, j});
        expand_generic(m, rows, pos + 1, w, remaining, out);
        w.steps.pop_back();
        ++remaining[j - 1];
    }
}

} // namespace

NcSeries coefficient_G_generic(int m, const std::vector<long>& p, const std::vector<long>& r) {
    long sp = std::accumulate(p.begin(), p.end(), 0L);
    long sr = std::accumulate(r.begin(), r.end(), 0L);
    if (sp != sr) throw std::domain_error("coefficient_G_generic: sum(p) != sum(r)");
    std::vector<long> rows; // row index of each factor, increasing with multiplicity p_i
    for (int i = 1; i <= m; ++i)
        for (long rep = 0; rep < p[i - 1]; ++rep) rows.push_back(i);
    NcSeries out(static_cast<int>(sp));
    Word w;
    std::vector<long> remaining = r;
    expand_generic(m, rows, 0, w, remaining, out);
    return out;
}

namespace {

void expand_nc(const std::vector<std::vector<NcSeries>>& entries,
               const std::vector<long>& rows, std::size_t pos, const NcSeries& acc,
               std::vector<long>& remaining, NcSeries& out) {
    if (pos == rows.size()) {
        out += acc;
        return;
    }
    int i = static_cast<int>(rows[pos]);
    int m = static_cast<int>(entries.size());
    for (int j = 1; j <= m; ++j) {
        if (remaining[j - 1] == 0) continue;
        --remaining[j - 1];
        expand_nc(entries, rows, pos + 1, acc * entries[i - 1][j - 1], remaining, out);
        ++remaining[j - 1];
    }
}

} // namespace

NcSeries coefficient_G_nc(const std::vector<std::vector<NcSeries>>& entries,
                          const std::vector<long>& p, const std::vector<long>& r) {
    long sp = std::accumulate(p.begin(), p.end(), 0L);
    long sr = std::accumulate(r.begin(), r.end(), 0L);
    if (sp != sr) throw std::domain_error("coefficient_G_nc: sum(p) != sum(r)");
    if (entries.size() != p.size()) throw std::domain_error("coefficient_G_nc: dimension mismatch");
    std::vector<long> rows;
    for (std::size_t i = 1; i <= entries.size(); ++i)
        for (long rep = 0; rep < p[i - 1]; ++rep) rows.push_back(static_cast<long>(i));
    int max_degree = entries.empty() ? 0 : entries[0][0].max_degree();
    NcSeries out(max_degree);
    std::vector<long> remaining = r;
    expand_nc(entries, rows, 0, NcSeries::one(max_degree), remaining, out);
    return out;
}

namespace {

void for_each_composition(int parts, long total, std::vector<long>& cur, std::size_t pos,
                          const std::function<void(const std::vector<long>&)>& f) {
    if (pos + 1 == static_cast<std::size_t>(parts)) {
        cur[pos] = total;
        f(cur);
        return;
    }
    for (long t = 0; t <= total; ++t) {
        cur[pos] = t;
        for_each_composition(parts, total - t, cur, pos + 1, f);
    }
}

} // namespace

CommPoly eval_F_series(const ScalarMatrix& A, const std::vector<long>& d,
                       long max_total_degree) {
    long sum = std::accumulate(d.begin(), d.end(), 0L);
    if (sum != 0) throw std::domain_error("eval_F_series: entries of d must sum to 0");
    int m = static_cast<int>(A.size());
    CommPoly out(m);
    std::vector<long> r(m, 0);
    for (long n = 0; n <= max_total_degree; ++n) {
        for_each_composition(m, n, r, 0, [&](const std::vector<long>& rr) {
            std::vector<long> p(m);
            for (int t = 0; t < m; ++t) {
                p[t] = rr[t] + d[t];
                if (p[t] < 0) return;
            }
            Rational g = coefficient_G(A, p, rr);
            if (g == 0) return;
            Monomial e(m, 0);
            for (int t = 0; t < m; ++t) e[t] = static_cast<unsigned>(p[t]);
            out.add_term(e, g);
        });
    }
    return out;
}

bool cross_check_series(const ScalarMatrix& A, const std::vector<long>& d,
                        long max_total_degree) {
    MasterFormula F = eval_F(A, d);
    CommPoly via_formula = F.series(max_total_degree);
    CommPoly via_brute = eval_F_series(A, d, max_total_degree);
    return via_formula == via_brute;
}

DixonS dixon_S(long n) {
    DixonS out;
    out.brute = Integer(0);
    for (long i = 1; i <= n - 1; ++i) {
        Integer term = binomial(n, i - 1) * binomial(n, i) * binomial(n, i + 1);
        out.brute += (i % 2 == 0) ? term : -term;
    }
    if (n % 2 != 0) {
        out.closed = Integer(0);
    } else {
        long half = n / 2;
        out.closed = 2 * binomial(2 * half, half - 1) * binomial(3 * half, half - 1);
        if (half % 2 != 0) out.closed = -out.closed;
    }
    out.match = out.brute == out.closed;
    return out;
}

DixonSk dixon_Sk(long n, long k) {
    if (k < 0 || 2 * k > n) throw std::domain_error("dixon_Sk: need 0 <= k <= n/2");
    DixonSk out;
    out.brute = Integer(0);
    for (long i = k; i <= n - k; ++i) {
        Integer term = binomial(n, i - k) * binomial(n, i) * binomial(n, i + k);
        out.brute += (i % 2 == 0) ? term : -term;
    }
    if (n % 2 != 0) {
        out.factorial_form = Integer(0);
        out.double_sum = Integer(0);
    } else {
        long m = n / 2;
        Integer num = factorial(2 * m) * factorial(2 * m) * factorial(3 * m);
        Integer den = factorial(m) * factorial(m - k) * factorial(m + k) *
                      factorial(2 * m - k) * factorial(2 * m + k);
        Rational q(num, den);
        q.canonicalize();
        if (q.get_den() != 1) throw std::logic_error("dixon_Sk: factorial form not integral");
        out.factorial_form = q.get_num();
        if (m % 2 != 0) out.factorial_form = -out.factorial_form;
        if (k == 0) {
            out.double_sum = out.factorial_form;
        } else {
            Integer s(0);
            for (long j = 1; j <= k; ++j) {
                Integer inner(0);
                for (long i = 0; 2 * i <= j; ++i) {
                    Integer t = binomial(j, 2 * i) * binomial(3 * m - i + j - k, m - i - k) *
                                binomial(2 * m, m + k - i);
                    inner += ((m - i) % 2 == 0) ? t : -t;
                }
                s += binomial(2 * k - j - 1, k - 1) * inner;
            }
            out.double_sum = 2 * s;
        }
    }
    out.match = out.brute == out.factorial_form && out.brute == out.double_sum;
    return out;
}

} // namespace rqa
