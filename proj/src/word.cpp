#include "rqa/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rqa/permutation.hpp"

namespace rqa {

std::vector<int> Word::i_word() const {
    std::vector<int> v;
    v.reserve(steps.size());
    for (const Step& s : steps) v.push_back(s.i);
    return v;
}

std::vector<int> Word::j_word() const {
    std::vector<int> v;
    v.reserve(steps.size());
    for (const Step& s : steps) v.push_back(s.j);
    return v;
}

Word Word::concat(const Word& other) const {
    Word w = *this;
    w.steps.insert(w.steps.end(), other.steps.begin(), other.steps.end());
    return w;
}

TypePair word_type(const Word& w, int m) {
    TypePair t;
    t.p.assign(m, 0);
    t.r.assign(m, 0);
    for (const Step& s : w.steps) {
        if (s.i < 1 || s.i > m || s.j < 1 || s.j > m)
            throw std::domain_error("word_type: step height out of range 1..m");
        ++t.p[s.i - 1];
        ++t.r[s.j - 1];
    }
    return t;
}

bool is_balanced(const Word& w) {
    int m = 1;
    for (const Step& s : w.steps) m = std::max({m, s.i, s.j});
    TypePair t = word_type(w, m);
    return t.p == t.r;
}

long inversions(const std::vector<int>& u) {
    long count = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t l = k + 1; l < u.size(); ++l)
            if (u[k] > u[l]) ++count;
    return count;
}

long inv_alpha(const Word& w) {
    return inversions(w.j_word()) - inversions(w.i_word());
}

Word relabel(const Word& w, const Permutation& pi) {
    Permutation inv = pi.inverse();
    Word out;
    out.steps.reserve(w.size());
    for (const Step& s : w.steps) out.steps.push_back({inv(s.i), inv(s.j)});
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (const Step& s : w.steps) os << "a[" << s.i << "," << s.j << "]";
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    if (text == "1" || text.empty()) return w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'a') throw std::domain_error("parse_word: expected 'a' at \"" + text.substr(pos) + "\"");
        ++pos;
        if (pos >= text.size() || text[pos] != '[') throw std::domain_error("parse_word: expected '['");
        ++pos;
        std::size_t comma = text.find(',', pos);
        std::size_t close = text.find(']', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::domain_error("parse_word: malformed step");
        int i = std::stoi(text.substr(pos, comma - pos));
        int j = std::stoi(text.substr(comma + 1, close - comma - 1));
        if (i < 1 || j < 1) throw std::domain_error("parse_word: heights must be >= 1");
        w.steps.push_back({i, j});
        pos = close + 1;
    }
    return w;
}

} // namespace rqa
