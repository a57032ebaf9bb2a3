#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewsign/shapes.hpp"

namespace skewsign {

/// Two-line array with weakly increasing top line.
class Biword {
public:
    Biword() = default;
    Biword(std::vector<int> top, std::vector<int> bottom);

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    int size() const { return static_cast<int>(top_.size()); }
    bool empty() const { return top_.empty(); }

    friend bool operator==(const Biword&, const Biword&) = default;
    friend auto operator<=>(const Biword&, const Biword&) = default;

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

/// A biword with distinct entries per line, all in 1..n.
class PartialPermutation {
public:
    PartialPermutation() = default;
    /// Throws std::invalid_argument if the lines break the partial n-permutation rules.
    PartialPermutation(Biword word, int n);
    PartialPermutation(std::vector<int> top, std::vector<int> bottom, int n)
        : PartialPermutation(Biword(std::move(top), std::move(bottom)), n) {}

    const Biword& word() const { return word_; }
    const std::vector<int>& top() const { return word_.top(); }
    const std::vector<int>& bottom() const { return word_.bottom(); }
    int bound() const { return n_; }
    int size() const { return word_.size(); }

    friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
    friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;

private:
    Biword word_;
    int n_ = 0;
};

/// A bijection of 1..n in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    const std::vector<int>& images() const { return images_; }
    int size() const { return static_cast<int>(images_.size()); }
    /// 1-indexed.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Inserts the missing pairs (a_r, b_r) so the top line becomes 1..n; returns the bottom line.
Permutation complete(const PartialPermutation& pi, int n);

Sign perm_sign(const Permutation& p);

/// Values at the sorted 1-indexed positions are strictly increasing.
bool is_increasing_at(const Permutation& p, const std::vector<int>& indices);

/// Every partial n-permutation, ordered by size, then top set, then bottom arrangement.
std::vector<PartialPermutation> enumerate_partial_permutations(int n);

/// All k-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace skewsign
