#include "skewsign/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skewsign {

std::string GhostedValue::to_string() const {
    return is_eps() ? std::to_string(value) + "e" : std::to_string(value);
}

Tableau::Tableau(SkewShape shape, Rows rows) : shape_(std::move(shape)), rows_(std::move(rows)) { check(); }

Tableau Tableau::empty_on(const Partition& lambda) {
    return unchecked(SkewShape(lambda, lambda), Rows(static_cast<std::size_t>(lambda.length())));
}

Tableau Tableau::from_entries(SkewShape shape, const std::vector<std::pair<Cell, int>>& entries) {
    Rows rows(static_cast<std::size_t>(shape.outer().length()));
    for (int r = 1; r <= shape.outer().length(); ++r) {
        rows[r - 1].assign(static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r)),
                           GhostedValue::num(0));
    }
    std::vector<bool> seen(static_cast<std::size_t>(shape.size()), false);
    const auto all = cells(shape);
    for (const auto& [cell, value] : entries) {
        if (!shape.contains_cell(cell)) {
            throw std::invalid_argument("entry at (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                                        ") lies outside " + shape.to_string());
        }
        const auto idx = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), cell) - all.begin());
        if (seen[idx]) throw std::invalid_argument("cell assigned twice");
        seen[idx] = true;
        rows[cell.row - 1][cell.col - shape.inner().part(cell.row) - 1] = GhostedValue::num(value);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("entries do not cover every cell of " + shape.to_string());
    }
    return Tableau(std::move(shape), std::move(rows));
}

Tableau Tableau::unchecked(SkewShape shape, Rows rows) {
    Tableau t;
    t.shape_ = std::move(shape);
    t.rows_ = std::move(rows);
    return t;
}

GhostedValue Tableau::at(Cell c) const {
    if (!shape_.contains_cell(c)) throw std::out_of_range("cell outside tableau shape");
    return rows_[c.row - 1][c.col - shape_.inner().part(c.row) - 1];
}

std::vector<GhostedValue> Tableau::reading_word() const {
    std::vector<GhostedValue> w;
    w.reserve(static_cast<std::size_t>(entry_count()));
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::vector<std::pair<Cell, GhostedValue>> Tableau::entries() const {
    std::vector<std::pair<Cell, GhostedValue>> out;
    out.reserve(static_cast<std::size_t>(entry_count()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int row = static_cast<int>(r) + 1;
        const int offset = shape_.inner().part(row);
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
            out.push_back({{row, offset + static_cast<int>(k) + 1}, rows_[r][k]});
        }
    }
    return out;
}

bool Tableau::all_plain() const {
    for (const auto& row : rows_)
        for (const auto& e : row)
            if (e.is_eps()) return false;
    return true;
}

bool Tableau::is_standard() const {
    if (!all_plain()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(entry_count()) + 1, false);
    for (const auto& row : rows_) {
        for (const auto& e : row) {
            if (e.value < 1 || e.value > entry_count() || seen[static_cast<std::size_t>(e.value)]) return false;
            seen[static_cast<std::size_t>(e.value)] = true;
        }
    }
    return true;
}

std::string Tableau::violation() const {
    const auto& outer = shape_.outer();
    const auto& inner = shape_.inner();
    if (static_cast<int>(rows_.size()) != outer.length()) return "row count differs from outer shape length";
    for (int r = 1; r <= outer.length(); ++r) {
        const auto& row = rows_[r - 1];
        if (static_cast<int>(row.size()) != outer.part(r) - inner.part(r)) {
            return "row " + std::to_string(r) + " has wrong length";
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].value < 1) return "entries must be positive";
            if (k > 0 && !(row[k - 1] < row[k])) return "row " + std::to_string(r) + " not strictly increasing";
            const int col = inner.part(r) + static_cast<int>(k) + 1;
            if (r > 1 && col > inner.part(r - 1)) {
                // The cell above exists in the skew shape since outer_{r-1} >= outer_r >= col.
                const auto above = rows_[r - 2][col - inner.part(r - 1) - 1];
                if (!(above < row[k])) return "column " + std::to_string(col) + " not strictly increasing";
            }
        }
    }
    auto w = reading_word();
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) return "entries are not distinct";
    return {};
}

void Tableau::check() const {
    if (auto msg = violation(); !msg.empty()) {
        throw std::invalid_argument("invalid tableau on " + shape_.to_string() + ": " + msg);
    }
}

std::vector<GhostedValue> reading_word(const Tableau& t) { return t.reading_word(); }

Sign tableau_sign(const Tableau& t) { return word_sign(t.reading_word()); }
Sign tableau_invsign(const Tableau& t) { return word_invsign(t.reading_word()); }

namespace {

// Backtracking state for filling a skew shape with 1..n. filled[r] counts the
// cells of row r already holding a value; they are always a left-justified run.
class Filler {
public:
    explicit Filler(const SkewShape& shape)
        : shape_(shape), rows_(static_cast<std::size_t>(shape.outer().length())),
          filled_(static_cast<std::size_t>(shape.outer().length()), 0), row_offset_(rows_.size(), 0) {
        int offset = 0;
        for (int r = 1; r <= shape.outer().length(); ++r) {
            const int len = shape.outer().part(r) - shape.inner().part(r);
            rows_[r - 1].assign(static_cast<std::size_t>(len), GhostedValue::num(0));
            row_offset_[r - 1] = offset;
            offset += len;
        }
        occupied_.assign(static_cast<std::size_t>(offset), false);
    }

    // Visits each completed filling with the sign of its reading word.
    template <typename Visit>
    void run(Visit&& visit) {
        place(1, 0, visit);
    }

    Tableau snapshot() const { return Tableau::unchecked(shape_, rows_); }

private:
    bool addable(int r) const {
        const int len = shape_.outer().part(r) - shape_.inner().part(r);
        const int k = filled_[r - 1];
        if (k >= len) return false;
        if (r == 1) return true;
        const int col = shape_.inner().part(r) + k + 1;
        return col <= shape_.inner().part(r - 1) + filled_[r - 2];
    }

    template <typename Visit>
    void place(int value, std::int64_t inversions, Visit& visit) {
        if (value > shape_.size()) {
            visit(*this, parity_sign(inversions));
            return;
        }
        for (int r = 1; r <= shape_.outer().length(); ++r) {
            if (!addable(r)) continue;
            const int k = filled_[r - 1];
            const auto pos = static_cast<std::size_t>(row_offset_[r - 1] + k);
            // Every value already placed is smaller, so each one read later is an inversion.
            std::int64_t later = 0;
            for (std::size_t i = pos + 1; i < occupied_.size(); ++i) later += occupied_[i] ? 1 : 0;
            rows_[r - 1][static_cast<std::size_t>(k)] = GhostedValue::num(value);
            occupied_[pos] = true;
            ++filled_[r - 1];
            place(value + 1, inversions + later, visit);
            --filled_[r - 1];
            occupied_[pos] = false;
        }
    }

    const SkewShape& shape_;
    Tableau::Rows rows_;
    std::vector<int> filled_;
    std::vector<int> row_offset_;
    std::vector<bool> occupied_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in tableau count");
    return out;
}

}  // namespace

void for_each_standard_tableau(const SkewShape& shape, const std::function<void(const Tableau&)>& visit) {
    Filler filler(shape);
    filler.run([&](const Filler& f, Sign) { visit(f.snapshot()); });
}

std::vector<StandardTableau> enumerate_standard_tableaux(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    for_each_standard_tableau(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::int64_t count_standard_tableaux(const SkewShape& shape) {
    const auto& inner = shape.inner();
    std::map<std::vector<int>, std::int64_t> memo;
    std::function<std::int64_t(std::vector<int>&)> count = [&](std::vector<int>& outer) -> std::int64_t {
        bool at_inner = true;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            if (outer[i] != inner.part(static_cast<int>(i) + 1)) {
                at_inner = false;
                break;
            }
        }
        if (at_inner) return 1;
        if (auto it = memo.find(outer); it != memo.end()) return it->second;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const int below = (i + 1 < outer.size()) ? outer[i + 1] : 0;
            if (outer[i] > below && outer[i] > inner.part(static_cast<int>(i) + 1)) {
                --outer[i];
                total = checked_add(total, count(outer));
                ++outer[i];
            }
        }
        memo.emplace(outer, total);
        return total;
    };
    std::vector<int> outer = shape.outer().vec();
    return count(outer);
}

std::int64_t imbalance(const SkewShape& shape) {
    std::int64_t total = 0;
    Filler filler(shape);
    filler.run([&](const Filler&, Sign s) { total = checked_add(total, s); });
    return total;
}

bool is_chess(const StandardTableau& t) {
    for (const auto& [cell, value] : t.entries()) {
        const bool odd_entry = value.value % 2 == 1;
        const bool even_distance = (cell.row + cell.col) % 2 == 0;
        if (odd_entry != even_distance) return false;
    }
    return true;
}

StandardTableau standardize(const Tableau& t) {
    if (!t.all_plain()) throw std::invalid_argument("standardize needs plain entries");
    auto sorted = t.reading_word();
    std::sort(sorted.begin(), sorted.end());
    Tableau::Rows rows = t.rows();
    for (auto& row : rows) {
        for (auto& e : row) {
            const auto rank = std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin() + 1;
            e = GhostedValue::num(static_cast<int>(rank));
        }
    }
    return Tableau::unchecked(t.shape(), std::move(rows));
}

}  // namespace skewsign
