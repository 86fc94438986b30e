#include "rqa/rq_ideal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "rqa/sequences.hpp"

namespace rqa {

std::string to_string(RelationSet rs) {
    switch (rs) {
        case RelationSet::Free: return "free";
        case RelationSet::CrossOnly: return "cross_only";
        case RelationSet::RightQuantum: return "right_quantum";
    }
    return "?";
}

RelationSet relation_set_from_string(const std::string& s) {
    if (s == "free") return RelationSet::Free;
    if (s == "cross_only" || s == "cross") return RelationSet::CrossOnly;
    if (s == "right_quantum" || s == "rightquantum") return RelationSet::RightQuantum;
    throw std::domain_error("unknown relation set: " + s);
}

std::vector<NcSeries> relation_generators(int m, RelationSet rs) {
    std::vector<NcSeries> gens;
    if (rs == RelationSet::Free) return gens;
    if (rs == RelationSet::RightQuantum) {
        // a_{jk} a_{ik} - a_{ik} a_{jk} for i < j, all k
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = 1; k <= m; ++k) {
                    NcSeries g(2);
                    g.add_term(Word{{j, k}, {i, k}}, Rational(1));
                    g.add_term(Word{{i, k}, {j, k}}, Rational(-1));
                    gens.push_back(std::move(g));
                }
    }
    // a_{ik} a_{jl} - a_{jk} a_{il} - a_{jl} a_{ik} + a_{il} a_{jk} for i < j, k != l
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l) {
                    if (k == l) continue;
                    NcSeries g(2);
                    g.add_term(Word{{i, k}, {j, l}}, Rational(1));
                    g.add_term(Word{{j, k}, {i, l}}, Rational(-1));
                    g.add_term(Word{{j, l}, {i, k}}, Rational(-1));
                    g.add_term(Word{{i, l}, {j, k}}, Rational(1));
                    gens.push_back(std::move(g));
                }
    return gens;
}

std::uint64_t IdealBasis::encode(const Word& w, int m) {
    std::uint64_t base = static_cast<std::uint64_t>(m) * m;
    std::uint64_t id = 0;
    for (const Step& s : w.steps) {
        if (s.i < 1 || s.i > m || s.j < 1 || s.j > m)
            throw std::domain_error("encode: step height out of range");
        id = id * base + static_cast<std::uint64_t>((s.i - 1) * m + (s.j - 1));
    }
    return id;
}

Word IdealBasis::decode(std::uint64_t id, int m, int len) {
    std::uint64_t base = static_cast<std::uint64_t>(m) * m;
    Word w;
    w.steps.resize(len);
    for (int k = len - 1; k >= 0; --k) {
        int letter = static_cast<int>(id % base);
        id /= base;
        w.steps[k] = {letter / m + 1, letter % m + 1};
    }
    return w;
}

IdealBasis::SparseVec IdealBasis::encode_series(const NcSeries& comp) const {
    SparseVec v;
    v.reserve(comp.terms().size());
    for (const auto& [w, c] : comp.terms()) {
        if (static_cast<int>(w.size()) != degree_)
            throw std::domain_error("encode_series: component is not homogeneous of the basis degree");
        v.emplace_back(encode(w, m_), c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

namespace {

// v -= c * row, both sorted by id; row's leading entry has coefficient 1
IdealBasis::SparseVec axpy(const IdealBasis::SparseVec& v, const Rational& c,
                           const IdealBasis::SparseVec& row) {
    IdealBasis::SparseVec out;
    out.reserve(v.size() + row.size());
    std::size_t a = 0, b = 0;
    while (a < v.size() || b < row.size()) {
        if (b == row.size() || (a < v.size() && v[a].first < row[b].first)) {
            out.push_back(v[a++]);
        } else if (a == v.size() || row[b].first < v[a].first) {
            out.emplace_back(row[b].first, -c * row[b].second);
            ++b;
        } else {
            Rational nc = v[a].second - c * row[b].second;
            if (nc != 0) out.emplace_back(v[a].first, nc);
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

void IdealBasis::insert_row(SparseVec row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            Rational lead = row.front().second;
            if (lead != 1)
                for (auto& [id, c] : row) c /= lead;
            std::uint64_t pivot = row.front().first;
            pivots_.emplace(pivot, std::move(row));
            return;
        }
        row = axpy(row, row.front().second, it->second);
    }
}

IdealBasis::IdealBasis(int m, RelationSet rs, int degree)
    : m_(m), rs_(rs), degree_(degree) {
    if (degree < 2 || rs == RelationSet::Free) return;

    // distinct generators as sorted 2-letter encoded rows
    std::vector<SparseVec> gens;
    for (const NcSeries& g : relation_generators(m, rs)) {
        SparseVec row;
        for (const auto& [w, c] : g.terms()) row.emplace_back(encode(w, m), c);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        gens.push_back(std::move(row));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // span of { u * g * v : |u| + |v| = degree - 2 }
    std::uint64_t base = static_cast<std::uint64_t>(m) * m;
    for (int a = 0; a <= degree - 2; ++a) {
        int b = degree - 2 - a;
        std::uint64_t ucount = 1, vcount = 1;
        for (int t = 0; t < a; ++t) ucount *= base;
        for (int t = 0; t < b; ++t) vcount *= base;
        std::uint64_t vshift = vcount;
        for (std::uint64_t u = 0; u < ucount; ++u) {
            for (const SparseVec& g : gens) {
                for (std::uint64_t v = 0; v < vcount; ++v) {
                    SparseVec row;
                    row.reserve(g.size());
                    for (const auto& [gid, c] : g)
                        row.emplace_back((u * base * base + gid) * vshift + v, c);
                    insert_row(std::move(row));
                }
            }
        }
    }
}

IdealBasis::SparseVec IdealBasis::reduce(SparseVec v) const {
    SparseVec residual;
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) {
            // no pivot: the leading term survives; later terms may still reduce
            residual.push_back(v.front());
            v.erase(v.begin());
        } else {
            v = axpy(v, v.front().second, it->second);
        }
    }
    return residual;
}

bool IdealBasis::contains(const NcSeries& comp) const {
    if (comp.is_zero()) return true;
    return reduce(encode_series(comp)).empty();
}

namespace {

std::map<std::tuple<int, int, int>, std::shared_ptr<const IdealBasis>> g_basis_cache;
std::mutex g_basis_mutex;

} // namespace

std::shared_ptr<const IdealBasis> ideal_degree_basis(int m, RelationSet rs, int degree) {
    std::tuple<int, int, int> key{m, static_cast<int>(rs), degree};
    {
        std::lock_guard<std::mutex> lock(g_basis_mutex);
        auto it = g_basis_cache.find(key);
        if (it != g_basis_cache.end()) return it->second;
    }
    auto basis = std::make_shared<const IdealBasis>(m, rs, degree);
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto [it, inserted] = g_basis_cache.emplace(key, std::move(basis));
    return it->second;
}

MembershipReport ideal_contains_report(const NcSeries& s, int m, RelationSet rs) {
    MembershipReport report;
    for (int n = 0; n <= s.top_degree(); ++n) {
        NcSeries comp = s.homogeneous_component(n);
        if (comp.is_zero()) continue;
        DegreeReport dr;
        dr.degree = n;
        dr.component_terms = comp.term_count();
        if (n < 2) {
            dr.ideal_dim = 0;
            dr.in_ideal = false; // nonzero degree-0/1 terms are never in the ideal
        } else {
            auto basis = ideal_degree_basis(m, rs, n);
            dr.ideal_dim = basis->dimension();
            dr.in_ideal = basis->contains(comp);
        }
        report.contained = report.contained && dr.in_ideal;
        report.degrees.push_back(dr);
    }
    return report;
}

bool ideal_contains(const NcSeries& s, int m, RelationSet rs) {
    return ideal_contains_report(s, m, rs).contained;
}

bool equal_mod_ideal(const NcSeries& s1, const NcSeries& s2, int m, RelationSet rs,
                     int max_degree) {
    NcSeries diff(max_degree);
    diff += s1;
    diff -= s2;
    return ideal_contains(diff, m, rs);
}

bool verify_main1(int m, const std::vector<long>& p, const std::vector<long>& r,
                  const Permutation& pi, const Permutation& sigma, Main1Variant variant,
                  std::optional<RelationSet> rs_override) {
    long n = 0;
    for (long x : p) n += x;
    if (variant == Main1Variant::Part2)
        for (long x : p)
            if (x > 1) throw std::domain_error("verify_main1 part 2 requires all p_i <= 1");

    SequenceClassQuery lhs_q{p, r, pi,
                             variant == Main1Variant::Part1 ? SequenceClass::Ordered
                                                            : SequenceClass::BackOrdered};
    SequenceClassQuery rhs_q{p, r, sigma,
                             variant == Main1Variant::Part1 ? SequenceClass::Path
                                                            : SequenceClass::BackPath};
    RelationSet rs = rs_override.value_or(variant == Main1Variant::Part1
                                              ? RelationSet::RightQuantum
                                              : RelationSet::CrossOnly);
    return equal_mod_ideal(signed_class_sum(lhs_q), signed_class_sum(rhs_q), m, rs,
                           static_cast<int>(n));
}

} // namespace rqa
