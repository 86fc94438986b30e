#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rqa/rational.hpp"

namespace rqa {

class Permutation;

// A lattice step from starting height i to ending height j, i.e. the variable a_{ij}.
struct Step {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const Step&, const Step&) = default;
};

// A finite sequence of steps = a word in the variables a_{ij}.
// The empty word is the unit of the algebra.
struct Word {
    std::vector<Step> steps;

    Word() = default;
    explicit Word(std::vector<Step> s) : steps(std::move(s)) {}
    Word(std::initializer_list<Step> s) : steps(s) {}

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    std::vector<int> i_word() const;
    std::vector<int> j_word() const;

    Word concat(const Word& other) const;

    // lexicographic by the flattened height sequence (i1, j1, i2, j2, ...)
    friend auto operator<=>(const Word&, const Word&) = default;
};

// Starting-height counts p and ending-height counts r of a word.
struct TypePair {
    std::vector<long> p;
    std::vector<long> r;

    friend bool operator==(const TypePair&, const TypePair&) = default;
};

// p_k = #steps starting at height k, r_k = #steps ending at height k.
// Throws std::domain_error if a height falls outside 1..m.
TypePair word_type(const Word& w, int m);

// true iff p = r (heights beyond the largest occurring one contribute zeros)
bool is_balanced(const Word& w);

// number of pairs k < l with u_k > u_l
long inversions(const std::vector<int>& u);

// inv(j-word) - inv(i-word); may be negative
long inv_alpha(const Word& w);

// relabel each step (i, j) -> (pi^{-1}(i), pi^{-1}(j)); maps sequences ordered
// w.r.t. pi to sequences ordered w.r.t. the identity
Word relabel(const Word& w, const Permutation& pi);

// canonical text form "a[2,3]a[1,4]..."; the empty word prints as "1"
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

} // namespace rqa
