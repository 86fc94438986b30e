#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rqa/nc_series.hpp"
#include "rqa/permutation.hpp"
#include "rqa/word.hpp"

namespace rqa {

// Which quadratic relations generate the quotient ideal.
enum class RelationSet { Free, CrossOnly, RightQuantum };

std::string to_string(RelationSet rs);
RelationSet relation_set_from_string(const std::string& s);

// The degree-2 generators:
//   RightQuantum: a_{jk} a_{ik} - a_{ik} a_{jk}              (i < j, all k)
//             and a_{ik} a_{jl} - a_{jk} a_{il} - a_{jl} a_{ik} + a_{il} a_{jk}
//                                                             (i < j, k != l)
//   CrossOnly: only the second family. Free: empty.
std::vector<NcSeries> relation_generators(int m, RelationSet rs);

// Row-echelon basis of the degree-n component of the two-sided ideal, in the
// word basis of degree n. Rows are sparse vectors over encoded words; the
// pivot of each row is its lexicographically smallest word.
class IdealBasis {
public:
    using SparseVec = std::vector<std::pair<std::uint64_t, Rational>>; // sorted by id

    IdealBasis(int m, RelationSet rs, int degree);

    int m() const { return m_; }
    int degree() const { return degree_; }
    RelationSet relations() const { return rs_; }
    std::size_t dimension() const { return pivots_.size(); }

    // remainder of v after elimination against the basis; empty iff v is in the span
    SparseVec reduce(SparseVec v) const;
    bool contains(const NcSeries& homogeneous_component) const;

    // base-m^2 encoding of a degree-n word; numeric order = lexicographic order
    static std::uint64_t encode(const Word& w, int m);
    static Word decode(std::uint64_t id, int m, int len);
    SparseVec encode_series(const NcSeries& homogeneous_component) const;

private:
    int m_;
    RelationSet rs_;
    int degree_;
    std::map<std::uint64_t, SparseVec> pivots_; // leading word id -> monic row

    void insert_row(SparseVec row);
};

// Cached per (m, rs, degree); safe for concurrent use.
std::shared_ptr<const IdealBasis> ideal_degree_basis(int m, RelationSet rs, int degree);

struct DegreeReport {
    int degree = 0;
    std::size_t ideal_dim = 0;
    std::size_t component_terms = 0;
    bool in_ideal = true;
};

struct MembershipReport {
    bool contained = true;
    std::vector<DegreeReport> degrees; // one entry per nonzero homogeneous component
};

// Membership of every homogeneous component of s in the ideal over dimension m.
MembershipReport ideal_contains_report(const NcSeries& s, int m, RelationSet rs);
bool ideal_contains(const NcSeries& s, int m, RelationSet rs);

// ideal_contains(s1 - s2) with both series truncated to max_degree
bool equal_mod_ideal(const NcSeries& s1, const NcSeries& s2, int m, RelationSet rs,
                     int max_degree);

enum class Main1Variant { Part1, Part2 };

// Part1: O^pi(p;r) == P^sigma(p;r) mod the RightQuantum ideal.
// Part2: Obar^pi(p;r) == Pbar^sigma(p;r) mod the CrossOnly ideal, requires all p_i <= 1.
// rs_override replaces the default relation set (negative controls use Free).
bool verify_main1(int m, const std::vector<long>& p, const std::vector<long>& r,
                  const Permutation& pi, const Permutation& sigma, Main1Variant variant,
                  std::optional<RelationSet> rs_override = std::nullopt);

} // namespace rqa
