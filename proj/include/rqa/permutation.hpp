#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqa {

// A permutation of {1..m} in one-line notation: img[k-1] = pi(k).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) { validate(); }

    static Permutation identity(int m) {
        std::vector<int> v(m);
        for (int k = 0; k < m; ++k) v[k] = k + 1;
        return Permutation(std::move(v));
    }

    // "231" -> the permutation 1->2, 2->3, 3->1; digits only, so m <= 9
    static Permutation from_string(const std::string& one_line) {
        std::vector<int> v;
        for (char c : one_line) {
            if (c < '1' || c > '9') throw std::domain_error("Permutation: expected digits 1..9");
            v.push_back(c - '0');
        }
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_.at(k - 1); }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int k = 0; k < size(); ++k) v[img_[k] - 1] = k + 1;
        return Permutation(std::move(v));
    }

    const std::vector<int>& images() const { return img_; }

    std::string str() const {
        std::string s;
        for (int v : img_) s += static_cast<char>('0' + v);
        return s;
    }

    // number of inversions of the one-line word
    long inv_count() const {
        long c = 0;
        for (std::size_t k = 0; k < img_.size(); ++k)
            for (std::size_t l = k + 1; l < img_.size(); ++l)
                if (img_[k] > img_[l]) ++c;
        return c;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

    // all elements of S_m in lexicographic one-line order
    static std::vector<Permutation> all(int m) {
        std::vector<int> v(m);
        for (int k = 0; k < m; ++k) v[k] = k + 1;
        std::vector<Permutation> out;
        do {
            out.push_back(Permutation(v));
        } while (std::next_permutation(v.begin(), v.end()));
        return out;
    }

private:
    std::vector<int> img_;

    void validate() const {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > size() || seen[v - 1])
                throw std::domain_error("Permutation: images are not a bijection on 1..m");
            seen[v - 1] = true;
        }
    }
};

} // namespace rqa
