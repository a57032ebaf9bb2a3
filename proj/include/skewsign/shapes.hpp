#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace skewsign {

/// A sign, always +1 or -1.
using Sign = int;

inline constexpr Sign parity_sign(std::int64_t exponent) {
    return (exponent % 2 == 0) ? 1 : -1;
}

/// An integer partition in normal form: positive, weakly decreasing parts.
/// Trailing zeros are stripped on construction; the empty partition is ∅.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    /// Number of nonzero rows.
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// 1-indexed row length; rows past the end read as 0.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    /// Column height of 1-indexed column `col`.
    int column_height(int col) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// 1-indexed (row, column).
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Skew shape outer/inner. Equality compares both partitions, not the cell set:
/// (6,4,2,2,1)/(4,3,2) and (6,4,3,2,1)/(4,3,3) are different shapes.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int size() const { return outer_.size() - inner_.size(); }
    bool contains_cell(Cell c) const {
        return c.row >= 1 && c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
    }

    std::string to_string() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

bool contains(const Partition& inner, const Partition& outer);

/// Cells of the skew shape in row-major (reading) order.
std::vector<Cell> cells(const SkewShape& shape);

/// Maximal number of disjoint vertical dominoes.
int v(const Partition& lambda);
/// Maximal number of disjoint horizontal dominoes.
int h(const Partition& lambda);
/// Maximal number of disjoint 2x2 squares.
int d(const Partition& lambda);

/// (-1)^(sum over cells of row-1).
Sign rsgn(const SkewShape& shape);

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All lambda containing alpha with |lambda| - |alpha| = n, decreasing lexicographic.
std::vector<Partition> enumerate_outer_extensions(const Partition& alpha, int n);

/// All mu inside alpha with |alpha| - |mu| = n, decreasing lexicographic.
std::vector<Partition> enumerate_inner_subshapes(const Partition& alpha, int n);

/// Every partition contained in alpha (any size), decreasing lexicographic.
std::vector<Partition> enumerate_subshapes(const Partition& alpha);

/// Parses "3,2,1"; empty string (or whitespace) is ∅. Throws std::invalid_argument.
Partition parse_partition(const std::string& text);

}  // namespace skewsign
