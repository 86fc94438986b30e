#pragma once

#include <string>
#include <vector>

#include "rqa/nc_series.hpp"
#include "rqa/permutation.hpp"
#include "rqa/word.hpp"

namespace rqa {

enum class SequenceClass { Ordered, BackOrdered, Path, BackPath };

std::string to_string(SequenceClass c);
SequenceClass sequence_class_from_string(const std::string& s);

struct SequenceClassQuery {
    std::vector<long> p;
    std::vector<long> r;
    Permutation pi;
    SequenceClass cls = SequenceClass::Ordered;
};

// All words of type (p; r): every arrangement of the starting-height multiset
// paired with every arrangement of the ending-height multiset. Sorted
// lexicographically. Throws std::domain_error if sum(p) != sum(r).
std::vector<Word> enumerate_words(const std::vector<long>& p, const std::vector<long>& r);

// class membership predicates
bool is_ordered(const Word& w, const Permutation& pi);
bool is_back_ordered(const Word& w, const Permutation& pi);
bool is_path_sequence(const Word& w, const Permutation& sigma);
bool is_back_path(const Word& w, const Permutation& pi);

// left-right reversal with i/j swapped in every step; back-path sequences are
// exactly the words whose reversal is a path sequence
Word reverse_swap(const Word& w);

// the subset of enumerate_words(p, r) satisfying the class predicate
std::vector<Word> enumerate_class(const SequenceClassQuery& q);

// Ordered: multinomial(n; r), BackOrdered: multinomial(n; p),
// Path/BackPath: size of the enumeration (no closed form)
Integer class_cardinality(const SequenceClassQuery& q);

// The transformation of an ordered sequence into a path sequence w.r.t. sigma
// by repeated adjacent switches. If trace is non-null it receives the full
// orbit: the input word, the word after every single switch, ending with the
// result. Throws std::domain_error if w is not ordered w.r.t. the identity.
Word phi(const Word& w, const Permutation& sigma, std::vector<Word>* trace = nullptr);

// Inverse of phi: lists all steps of starting height 1 in order of appearance,
// then height 2, and so on. Throws if w is not a path sequence w.r.t. sigma.
Word phi_inverse(const Word& w, const Permutation& sigma);

// One switch of the transformation. Path sequences are fixed points; otherwise
// the result is the next word in the phi-orbit of the associated ordered word.
// Throws std::domain_error if w is not a q-sequence w.r.t. sigma.
Word psi(const Word& w, const Permutation& sigma);

// true iff w occurs in the phi-orbit of its associated ordered word
bool is_q_sequence(const Word& w, const Permutation& sigma);

// inversions of (sigma^{-1}(i_1), ..., sigma^{-1}(i_n)); rank w.r.t. the
// identity is the one that increases by exactly 1 along every psi switch
long rank(const Word& w, const Permutation& sigma);

// O / O-bar / P / P-bar: unsigned sums for Ordered and Path, sums weighted by
// (-1)^{inv alpha} for BackOrdered and BackPath
NcSeries signed_class_sum(const SequenceClassQuery& q);

} // namespace rqa
