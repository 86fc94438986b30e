#include "rqa/comm_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rqa {

long total_degree(const Monomial& e) {
    long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

CommPoly CommPoly::constant(const Rational& c, int nvars) {
    CommPoly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

CommPoly CommPoly::variable(int k, int nvars) {
    CommPoly p(nvars);
    Monomial e(nvars, 0);
    e.at(k - 1) = 1;
    p.terms_[e] = Rational(1);
    return p;
}

Rational CommPoly::coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational CommPoly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

void CommPoly::add_term(const Monomial& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long CommPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    return a.mul_truncated(b, -1);
}

CommPoly CommPoly::mul_truncated(const CommPoly& other, long max_total_degree) const {
    CommPoly out(nvars_);
    Monomial e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int t = 0; t < nvars_; ++t) e[t] = ea[t] + eb[t];
            if (max_total_degree >= 0 && total_degree(e) > max_total_degree) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CommPoly CommPoly::truncated(long max_total_degree) const {
    CommPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= max_total_degree) out.terms_.emplace(e, c);
    return out;
}

CommPoly operator*(const Rational& c, CommPoly p) {
    if (c == 0) return CommPoly(p.nvars_);
    for (auto& [e, coeff] : p.terms_) coeff *= c;
    return p;
}

CommPoly CommPoly::operator-() const { return Rational(-1) * *this; }

Rational CommPoly::eval(const std::vector<Rational>& point) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int t = 0; t < nvars_; ++t)
            for (unsigned rep = 0; rep < e[t]; ++rep) term *= point.at(t);
        total += term;
    }
    return total;
}

std::string CommPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    // display order: total degree, then x1 powers before x2 powers and so on
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        long da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = total_degree(e) > 0;
        if (abs_c != 1 || !has_vars) os << abs_c.get_str() << (has_vars ? "*" : "");
        bool star = false;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (star) os << "*";
            star = true;
            if (v < static_cast<int>(var_names.size())) os << var_names[v];
            else os << "x" << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

namespace {

// all monomials in nvars variables of total degree exactly d, lexicographic
void monomials_of_degree(int nvars, long d, Monomial& prefix, int pos,
                         std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        prefix[pos] = static_cast<unsigned>(d);
        out.push_back(prefix);
        return;
    }
    for (long t = 0; t <= d; ++t) {
        prefix[pos] = static_cast<unsigned>(t);
        monomials_of_degree(nvars, d - t, prefix, pos + 1, out);
    }
}

} // namespace

CommPoly series_div(const CommPoly& num, const CommPoly& den, long max_total_degree) {
    Rational c0 = den.constant_term();
    if (c0 == 0) throw std::domain_error("series_div: denominator has zero constant term");
    int nvars = den.nvars();
    CommPoly u(nvars);
    // graded recurrence: u_e = (num_e - sum_{0 < f <= e} den_f * u_{e-f}) / den_0
    for (long d = 0; d <= max_total_degree; ++d) {
        std::vector<Monomial> monos;
        Monomial prefix(nvars, 0);
        if (nvars == 0) {
            if (d == 0) monos.push_back({});
        } else {
            monomials_of_degree(nvars, d, prefix, 0, monos);
        }
        for (const Monomial& e : monos) {
            Rational s = num.coefficient(e);
            for (const auto& [f, dc] : den.terms()) {
                if (total_degree(f) == 0) continue;
                Monomial g(nvars);
                bool ok = true;
                for (int t = 0; t < nvars; ++t) {
                    if (f[t] > e[t]) { ok = false; break; }
                    g[t] = e[t] - f[t];
                }
                if (!ok) continue;
                s -= dc * u.coefficient(g);
            }
            u.add_term(e, s / c0);
        }
    }
    return u;
}

Rational series_coefficient(const RationalFn& f, const Monomial& e) {
    CommPoly s = series_div(f.num, f.den, total_degree(e));
    return s.coefficient(e);
}

} // namespace rqa
