#include "skewsign/shapes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace skewsign {

namespace {

std::vector<int> normalized(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    return parts;
}

// Emits every partition of `total` whose row r lies in [lower(r), upper(r)],
// largest parts first, so output is decreasing lexicographic.
void generate(int total, const std::function<int(int)>& lower, const std::function<int(int)>& upper,
              std::vector<Partition>& out) {
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int row, int remaining, int cap) {
        if (remaining == 0) {
            if (lower(row) == 0) {
                out.emplace_back(current);
            }
            return;
        }
        const int hi = std::min({cap, upper(row), remaining});
        const int lo = std::max(lower(row), 1);
        for (int p = hi; p >= lo; --p) {
            current.push_back(p);
            rec(row + 1, remaining - p, p);
            current.pop_back();
        }
    };
    rec(1, total, std::numeric_limits<int>::max());
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(normalized(std::move(parts))) {
    for (int p : parts_) size_ += p;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::column_height(int col) const {
    int height = 0;
    while (height < length() && parts_[height] >= col) ++height;
    return height;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_)) {
        throw std::invalid_argument("inner shape " + inner_.to_string() + " is not contained in " +
                                    outer_.to_string());
    }
}

std::string SkewShape::to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

bool contains(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (int r = 1; r <= inner.length(); ++r) {
        if (inner.part(r) > outer.part(r)) return false;
    }
    return true;
}

std::vector<Cell> cells(const SkewShape& shape) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(shape.size()));
    for (int r = 1; r <= shape.outer().length(); ++r) {
        for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c) {
            out.push_back({r, c});
        }
    }
    return out;
}

int v(const Partition& lambda) {
    int total = 0;
    for (int c = 1; c <= lambda.part(1); ++c) total += lambda.column_height(c) / 2;
    return total;
}

int h(const Partition& lambda) {
    int total = 0;
    for (int p : lambda.parts()) total += p / 2;
    return total;
}

int d(const Partition& lambda) {
    // Pair rows (1,2), (3,4), ...; the shorter row of each pair is the even one.
    int total = 0;
    for (int r = 2; r <= lambda.length(); r += 2) total += lambda.part(r) / 2;
    return total;
}

Sign rsgn(const SkewShape& shape) {
    std::int64_t exponent = 0;
    for (int r = 1; r <= shape.outer().length(); ++r) {
        exponent += static_cast<std::int64_t>(r - 1) * (shape.outer().part(r) - shape.inner().part(r));
    }
    return parity_sign(exponent);
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    generate(n, [](int) { return 0; }, [](int) { return std::numeric_limits<int>::max(); }, out);
    return out;
}

std::vector<Partition> enumerate_outer_extensions(const Partition& alpha, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    generate(alpha.size() + n, [&](int r) { return alpha.part(r); },
             [](int) { return std::numeric_limits<int>::max(); }, out);
    return out;
}

std::vector<Partition> enumerate_inner_subshapes(const Partition& alpha, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    if (n > alpha.size()) return out;
    generate(alpha.size() - n, [](int) { return 0; }, [&](int r) { return alpha.part(r); }, out);
    return out;
}

std::vector<Partition> enumerate_subshapes(const Partition& alpha) {
    std::vector<Partition> out;
    for (int n = 0; n <= alpha.size(); ++n) {
        auto layer = enumerate_inner_subshapes(alpha, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw std::invalid_argument("empty part in partition '" + text + "'");
        }
        const auto last = token.find_last_not_of(" \t");
        const std::string trimmed = token.substr(first, last - first + 1);
        std::size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(trimmed, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad part '" + trimmed + "' in partition '" + text + "'");
        }
        if (consumed != trimmed.size()) {
            throw std::invalid_argument("bad part '" + trimmed + "' in partition '" + text + "'");
        }
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

}  // namespace skewsign
