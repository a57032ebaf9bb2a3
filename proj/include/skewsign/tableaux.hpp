#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewsign/shapes.hpp"

namespace skewsign {

/// Two-tier entry: every EPS value orders before every NUM value, and within a
/// tier values compare as integers. An EPS value b stands for b times an
/// infinitesimal, so b·ε < b'·ε iff b < b'.
struct GhostedValue {
    enum class Tier : std::uint8_t { Eps = 0, Num = 1 };

    Tier tier = Tier::Num;
    int value = 0;

    static constexpr GhostedValue num(int v) { return {Tier::Num, v}; }
    static constexpr GhostedValue eps(int v) { return {Tier::Eps, v}; }

    constexpr bool is_eps() const { return tier == Tier::Eps; }

    friend constexpr bool operator==(const GhostedValue&, const GhostedValue&) = default;
    friend constexpr auto operator<=>(const GhostedValue&, const GhostedValue&) = default;

    std::string to_string() const;
};

/// A (partial) tableau on a skew shape. Row r of `rows()` holds the entries of
/// columns inner_r+1 .. outer_r, so the concatenation of rows is the reading word.
/// Entries are distinct and strictly increase along rows and down columns.
class Tableau {
public:
    using Rows = std::vector<std::vector<GhostedValue>>;

    Tableau() = default;
    /// Validates; throws std::invalid_argument on any violation.
    Tableau(SkewShape shape, Rows rows);

    /// Empty tableau on lambda/lambda.
    static Tableau empty_on(const Partition& lambda);
    /// Plain-integer entries given per cell; every cell of `shape` must appear once.
    static Tableau from_entries(SkewShape shape, const std::vector<std::pair<Cell, int>>& entries);
    /// Skips validation; the insertion engine calls check() itself when asked to.
    static Tableau unchecked(SkewShape shape, Rows rows);

    const SkewShape& shape() const { return shape_; }
    const Rows& rows() const { return rows_; }
    int entry_count() const { return shape_.size(); }

    GhostedValue at(Cell c) const;
    std::vector<GhostedValue> reading_word() const;
    /// (cell, value) pairs in reading order.
    std::vector<std::pair<Cell, GhostedValue>> entries() const;

    bool all_plain() const;
    /// Entries are exactly the plain integers 1..n.
    bool is_standard() const;

    /// Empty string when valid, otherwise a description of the first violation.
    std::string violation() const;
    void check() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    Rows rows_;
};

using StandardTableau = Tableau;

std::vector<GhostedValue> reading_word(const Tableau& t);

/// Parity of inversions of a sequence of distinct comparable values.
template <typename T>
std::int64_t count_inversions(std::span<const T> w) {
    std::int64_t inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[j] < w[i]) ++inv;
    return inv;
}

template <typename T>
Sign word_sign(std::span<const T> w) {
    return parity_sign(count_inversions(w));
}

/// Parity of non-inversions.
template <typename T>
Sign word_invsign(std::span<const T> w) {
    const auto n = static_cast<std::int64_t>(w.size());
    return parity_sign(n * (n - 1) / 2 - count_inversions(w));
}

template <typename T>
Sign word_sign(const std::vector<T>& w) { return word_sign(std::span<const T>(w)); }
template <typename T>
Sign word_invsign(const std::vector<T>& w) { return word_invsign(std::span<const T>(w)); }

Sign tableau_sign(const Tableau& t);
Sign tableau_invsign(const Tableau& t);

/// Calls `visit` for every standard tableau of `shape`, placing 1..n in turn at
/// the addable cells tried in row-major order.
void for_each_standard_tableau(const SkewShape& shape, const std::function<void(const Tableau&)>& visit);
std::vector<StandardTableau> enumerate_standard_tableaux(const SkewShape& shape);

/// |ST(shape)| by memoized removal of outer corners.
std::int64_t count_standard_tableaux(const SkewShape& shape);

/// Sum of sgn T over ST(shape), by exhaustive backtracking with incremental sign.
std::int64_t imbalance(const SkewShape& shape);

/// Odd entries at even (r-1)+(c-1), even entries at odd; cells measured from
/// (1,1) of the outer shape.
bool is_chess(const StandardTableau& t);

/// Relabels plain entries by rank 1..n, keeping the shape.
StandardTableau standardize(const Tableau& t);

}  // namespace skewsign
