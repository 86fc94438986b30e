#include "rqa/nc_series.hpp"

#include <algorithm>
#include <sstream>

namespace rqa {

NcSeries NcSeries::one(int max_degree) {
    NcSeries s(max_degree);
    s.terms_[Word{}] = Rational(1);
    return s;
}

NcSeries NcSeries::from_word(const Word& w, int max_degree, const Rational& coeff) {
    NcSeries s(max_degree);
    s.add_term(w, coeff);
    return s;
}

Rational NcSeries::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcSeries::add_term(const Word& w, const Rational& coeff) {
    if (coeff == 0 || static_cast<int>(w.size()) > max_degree_) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NcSeries& NcSeries::operator+=(const NcSeries& other) {
    max_degree_ = std::min(max_degree_, other.max_degree_);
    std::erase_if(terms_, [this](const auto& t) {
        return static_cast<int>(t.first.size()) > max_degree_;
    });
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& other) {
    max_degree_ = std::min(max_degree_, other.max_degree_);
    std::erase_if(terms_, [this](const auto& t) {
        return static_cast<int>(t.first.size()) > max_degree_;
    });
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NcSeries operator*(const NcSeries& a, const NcSeries& b) {
    NcSeries out(std::min(a.max_degree_, b.max_degree_));
    for (const auto& [wa, ca] : a.terms_) {
        if (static_cast<int>(wa.size()) > out.max_degree_) continue;
        for (const auto& [wb, cb] : b.terms_) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_degree_) continue;
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    return out;
}

NcSeries operator*(const Rational& c, NcSeries s) {
    if (c == 0) return NcSeries(s.max_degree_);
    for (auto& [w, coeff] : s.terms_) coeff *= c;
    return s;
}

NcSeries NcSeries::operator-() const { return Rational(-1) * *this; }

NcSeries NcSeries::homogeneous_component(int n) const {
    NcSeries out(max_degree_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n) out.terms_.emplace(w, c);
    return out;
}

int NcSeries::top_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

NcSeries NcSeries::with_max_degree(int d) const {
    NcSeries out(d);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) <= d) out.terms_.emplace(w, c);
    return out;
}

std::string NcSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || w.empty()) os << abs_c.get_str() << (w.empty() ? "" : "*");
        if (!w.empty()) os << to_string(w);
    }
    return os.str();
}

} // namespace rqa
