#include "skewsign/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skewsign/tableaux.hpp"

namespace skewsign {

Biword::Biword(std::vector<int> top, std::vector<int> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size()) throw std::invalid_argument("biword lines differ in length");
    for (std::size_t i = 0; i < top_.size(); ++i) {
        if (top_[i] < 1 || bottom_[i] < 1) throw std::invalid_argument("biword entries must be positive");
        if (i > 0 && top_[i] < top_[i - 1]) throw std::invalid_argument("biword top line must be weakly increasing");
    }
}

PartialPermutation::PartialPermutation(Biword word, int n) : word_(std::move(word)), n_(n) {
    if (n < 0) throw std::invalid_argument("bound must be nonnegative");
    auto distinct_within = [n](const std::vector<int>& line) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int x : line) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = true;
        }
        return true;
    };
    if (!distinct_within(word_.top()) || !distinct_within(word_.bottom())) {
        throw std::invalid_argument("partial permutation lines must hold distinct values in 1.." + std::to_string(n));
    }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i && size() >= 10) os << ' ';
        os << images_[i];
    }
    return os.str();
}

Permutation complete(const PartialPermutation& pi, int n) {
    if (pi.bound() != n) {
        // Re-validate against the requested bound.
        PartialPermutation rebound(pi.word(), n);
        return complete(rebound, n);
    }
    std::vector<bool> in_top(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> in_bottom(static_cast<std::size_t>(n) + 1, false);
    for (int x : pi.top()) in_top[static_cast<std::size_t>(x)] = true;
    for (int x : pi.bottom()) in_bottom[static_cast<std::size_t>(x)] = true;

    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < pi.size(); ++i) images[static_cast<std::size_t>(pi.top()[i] - 1)] = pi.bottom()[i];

    std::vector<int> missing_bottom;
    for (int b = 1; b <= n; ++b)
        if (!in_bottom[static_cast<std::size_t>(b)]) missing_bottom.push_back(b);
    std::size_t next = 0;
    for (int a = 1; a <= n; ++a) {
        if (!in_top[static_cast<std::size_t>(a)]) images[static_cast<std::size_t>(a - 1)] = missing_bottom[next++];
    }
    return Permutation(std::move(images));
}

Sign perm_sign(const Permutation& p) { return word_sign(p.images()); }

bool is_increasing_at(const Permutation& p, const std::vector<int>& indices) {
    auto sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > p.size()) throw std::invalid_argument("index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw std::invalid_argument("repeated index");
        if (i > 0 && p(sorted[i - 1]) >= p(sorted[i])) return false;
    }
    return true;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> current(static_cast<std::size_t>(k));
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.push_back(current);
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<PartialPermutation> enumerate_partial_permutations(int n) {
    std::vector<PartialPermutation> out;
    for (int k = 0; k <= n; ++k) {
        const auto subsets = k_subsets(n, k);
        std::vector<std::vector<int>> arrangements;
        for (const auto& bottom_set : subsets) {
            auto bottom = bottom_set;
            do {
                arrangements.push_back(bottom);
            } while (std::next_permutation(bottom.begin(), bottom.end()));
        }
        std::sort(arrangements.begin(), arrangements.end());
        for (const auto& top : subsets) {
            for (const auto& bottom : arrangements) out.emplace_back(top, bottom, n);
        }
    }
    return out;
}

}  // namespace skewsign
