#include "rqa/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rqa {

std::string to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::Ordered: return "ordered";
        case SequenceClass::BackOrdered: return "back_ordered";
        case SequenceClass::Path: return "path";
        case SequenceClass::BackPath: return "back_path";
    }
    return "?";
}

SequenceClass sequence_class_from_string(const std::string& s) {
    if (s == "ordered") return SequenceClass::Ordered;
    if (s == "back_ordered") return SequenceClass::BackOrdered;
    if (s == "path") return SequenceClass::Path;
    if (s == "back_path") return SequenceClass::BackPath;
    throw std::domain_error("unknown sequence class: " + s);
}

namespace {

std::vector<int> multiset_from_counts(const std::vector<long>& counts) {
    std::vector<int> v;
    for (std::size_t h = 0; h < counts.size(); ++h) {
        if (counts[h] < 0) throw std::domain_error("type vector entries must be nonnegative");
        v.insert(v.end(), static_cast<std::size_t>(counts[h]), static_cast<int>(h + 1));
    }
    return v;
}

long checked_common_length(const std::vector<long>& p, const std::vector<long>& r) {
    if (p.size() != r.size()) throw std::domain_error("type (p;r): p and r have different lengths");
    long sp = std::accumulate(p.begin(), p.end(), 0L);
    long sr = std::accumulate(r.begin(), r.end(), 0L);
    if (sp != sr) throw std::domain_error("type (p;r): sum(p) != sum(r)");
    return sp;
}

void check_heights(const Word& w, int m) {
    for (const Step& s : w.steps)
        if (s.i < 1 || s.i > m || s.j < 1 || s.j > m)
            throw std::domain_error("word has a height outside 1..m");
}

} // namespace

std::vector<Word> enumerate_words(const std::vector<long>& p, const std::vector<long>& r) {
    long n = checked_common_length(p, r);
    std::vector<int> iw = multiset_from_counts(p);
    std::vector<int> jw = multiset_from_counts(r);
    std::vector<Word> out;
    do {
        std::vector<int> jcur = jw;
        do {
            Word w;
            w.steps.reserve(n);
            for (long k = 0; k < n; ++k) w.steps.push_back({iw[k], jcur[k]});
            out.push_back(std::move(w));
        } while (std::next_permutation(jcur.begin(), jcur.end()));
    } while (std::next_permutation(iw.begin(), iw.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_ordered(const Word& w, const Permutation& pi) {
    check_heights(w, pi.size());
    Permutation inv = pi.inverse();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (inv(w.steps[k].i) > inv(w.steps[k + 1].i)) return false;
    return true;
}

bool is_back_ordered(const Word& w, const Permutation& pi) {
    check_heights(w, pi.size());
    Permutation inv = pi.inverse();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (inv(w.steps[k].j) < inv(w.steps[k + 1].j)) return false;
    return true;
}

bool is_path_sequence(const Word& w, const Permutation& sigma) {
    // A word splits uniquely into maximal lattice paths: a path must continue
    // while the next step starts at the current ending height (a break there
    // would put a later step on the just-closed ending height). Check, per
    // path: its starting height is sigma-minimal among all steps from the
    // path's start onward, and no step after the path starts at its ending
    // height.
    check_heights(w, sigma.size());
    Permutation inv = sigma.inverse();
    std::size_t n = w.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end + 1 < n && w.steps[end + 1].i == w.steps[end].j) ++end;
        int start_height = w.steps[start].i;
        for (std::size_t t = start; t < n; ++t)
            if (inv(w.steps[t].i) < inv(start_height)) return false;
        int end_height = w.steps[end].j;
        for (std::size_t t = end + 1; t < n; ++t)
            if (w.steps[t].i == end_height) return false;
        start = end + 1;
    }
    return true;
}

Word reverse_swap(const Word& w) {
    Word out;
    out.steps.reserve(w.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
        out.steps.push_back({it->j, it->i});
    return out;
}

bool is_back_path(const Word& w, const Permutation& pi) {
    return is_path_sequence(reverse_swap(w), pi);
}

std::vector<Word> enumerate_class(const SequenceClassQuery& q) {
    if (q.pi.size() != static_cast<int>(q.p.size()))
        throw std::domain_error("enumerate_class: permutation size differs from the type length");
    std::vector<Word> all = enumerate_words(q.p, q.r);
    std::vector<Word> out;
    for (const Word& w : all) {
        bool keep = false;
        switch (q.cls) {
            case SequenceClass::Ordered: keep = is_ordered(w, q.pi); break;
            case SequenceClass::BackOrdered: keep = is_back_ordered(w, q.pi); break;
            case SequenceClass::Path: keep = is_path_sequence(w, q.pi); break;
            case SequenceClass::BackPath: keep = is_back_path(w, q.pi); break;
        }
        if (keep) out.push_back(w);
    }
    return out;
}

Integer class_cardinality(const SequenceClassQuery& q) {
    long n = checked_common_length(q.p, q.r);
    switch (q.cls) {
        case SequenceClass::Ordered: return multinomial(n, q.r);
        case SequenceClass::BackOrdered: return multinomial(n, q.p);
        default: return Integer(static_cast<long>(enumerate_class(q).size()));
    }
}

namespace {

// move the step at position `from` left to position `to` by adjacent switches,
// recording the word after each switch
void move_left(Word& cur, std::size_t from, std::size_t to, std::vector<Word>* trace) {
    for (std::size_t t = from; t > to; --t) {
        std::swap(cur.steps[t - 1], cur.steps[t]);
        if (trace) trace->push_back(cur);
    }
}

} // namespace

Word phi(const Word& w, const Permutation& sigma, std::vector<Word>* trace) {
    if (!is_ordered(w, Permutation::identity(sigma.size())))
        throw std::domain_error("phi: word is not ordered w.r.t. the identity");
    Permutation inv = sigma.inverse();
    Word cur = w;
    if (trace) {
        trace->clear();
        trace->push_back(cur);
    }
    std::size_t n = cur.size();
    std::size_t front = 0; // everything before `front` is completed paths
    while (front < n) {
        // start a new path: leftmost remaining step of sigma-minimal starting height
        std::size_t best = front;
        for (std::size_t t = front + 1; t < n; ++t)
            if (inv(cur.steps[t].i) < inv(cur.steps[best].i)) best = t;
        move_left(cur, best, front, trace);
        int height = cur.steps[front].j;
        std::size_t pos = front + 1;
        // extend with the leftmost step continuing at the current height
        while (true) {
            std::size_t next = n;
            for (std::size_t t = pos; t < n; ++t)
                if (cur.steps[t].i == height) { next = t; break; }
            if (next == n) break;
            move_left(cur, next, pos, trace);
            height = cur.steps[pos].j;
            ++pos;
        }
        front = pos;
    }
    return cur;
}

namespace {

// steps grouped by starting height, order of appearance preserved; this
// inverts phi because phi never reorders steps of equal starting height
Word associated_ordered(const Word& w) {
    int max_h = 1;
    for (const Step& s : w.steps) max_h = std::max(max_h, s.i);
    Word out;
    out.steps.reserve(w.size());
    for (int h = 1; h <= max_h; ++h)
        for (const Step& s : w.steps)
            if (s.i == h) out.steps.push_back(s);
    return out;
}

} // namespace

Word phi_inverse(const Word& w, const Permutation& sigma) {
    if (!is_path_sequence(w, sigma))
        throw std::domain_error("phi_inverse: word is not a path sequence w.r.t. sigma");
    return associated_ordered(w);
}

Word psi(const Word& w, const Permutation& sigma) {
    if (is_path_sequence(w, sigma)) return w;
    std::vector<Word> trace;
    phi(associated_ordered(w), sigma, &trace);
    for (std::size_t t = 0; t + 1 < trace.size(); ++t)
        if (trace[t] == w) return trace[t + 1];
    throw std::domain_error("psi: word is not a q-sequence w.r.t. sigma");
}

bool is_q_sequence(const Word& w, const Permutation& sigma) {
    if (is_path_sequence(w, sigma)) return true;
    std::vector<Word> trace;
    phi(associated_ordered(w), sigma, &trace);
    return std::find(trace.begin(), trace.end(), w) != trace.end();
}

long rank(const Word& w, const Permutation& sigma) {
    check_heights(w, sigma.size());
    Permutation inv = sigma.inverse();
    std::vector<int> u;
    u.reserve(w.size());
    for (const Step& s : w.steps) u.push_back(inv(s.i));
    return inversions(u);
}

NcSeries signed_class_sum(const SequenceClassQuery& q) {
    long n = checked_common_length(q.p, q.r);
    NcSeries sum(static_cast<int>(n));
    bool signed_sum = q.cls == SequenceClass::BackOrdered || q.cls == SequenceClass::BackPath;
    for (const Word& w : enumerate_class(q)) {
        Rational c(1);
        if (signed_sum && (inv_alpha(w) % 2 != 0)) c = -1;
        sum.add_term(w, c);
    }
    return sum;
}

} // namespace rqa
