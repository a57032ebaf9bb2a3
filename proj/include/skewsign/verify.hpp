#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewsign/shapes.hpp"

namespace skewsign {

/// Outcome of one identity check. `pass()` is exactly "no violations".
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::int64_t instances = 0;
    std::vector<std::string> violations;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::map<std::string, std::int64_t> tallies;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    bool pass() const { return violations.empty(); }
    std::int64_t tally(const std::string& key) const {
        auto it = tallies.find(key);
        return it == tallies.end() ? 0 : it->second;
    }
};

/// How a check spreads its work units. workers == 1 runs the serial reference
/// loop; 0 uses every available OpenMP thread. Results never depend on it.
struct RunConfig {
    int workers = 0;
    bool assert_ledgers = true;
};

/// Sparse polynomial in q, t, x with integer coefficients; zero terms are never stored.
class SparsePolynomial {
public:
    using Exponents = std::array<int, 3>;  // q, t, x

    SparsePolynomial() = default;
    static SparsePolynomial constant(std::int64_t c);
    static SparsePolynomial monomial(std::int64_t coeff, int q_deg, int t_deg, int x_deg);

    void add_term(const Exponents& e, std::int64_t coeff);
    SparsePolynomial& operator+=(const SparsePolynomial& other);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial pow(int k) const;

    std::int64_t evaluate(std::int64_t q, std::int64_t t, std::int64_t x) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    std::string to_string() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::map<Exponents, std::int64_t> terms_;
};

/// Sum over lambda/alpha of n cells of (-1)^v(lambda) I^2.
std::int64_t signed_outer_sum(const Partition& alpha, int n, const RunConfig& cfg = {});
/// Sum over alpha/mu of n cells of (-1)^v(mu) I^2.
std::int64_t signed_inner_sum(const Partition& alpha, int n, const RunConfig& cfg = {});

/// Exhaustive check of the sign-transfer formula under the skew correspondence,
/// plus bijectivity (image count and distinctness), both round trips, the
/// per-step sign ledgers, and the triple/quadruple bijection properties.
VerificationReport check_theorem_main(const Partition& alpha, int n, const RunConfig& cfg = {});

/// Outer signed sum against the inner one (even n) or the difference of two
/// inner sums (odd n).
VerificationReport check_theorem_inout(const Partition& alpha, int n, const RunConfig& cfg = {});

/// Sum over all lambda of n cells of (-1)^v(lambda) I_lambda^2 is zero (n >= 2).
VerificationReport check_theorem2(int n, const RunConfig& cfg = {});

VerificationReport check_corollary_square(const Partition& alpha, const RunConfig& cfg = {});

/// Throws std::out_of_range if m is below the range where vanishing is claimed:
/// m >= |alpha| + 2 for even |alpha|, m >= |alpha| for odd.
VerificationReport check_corollary_vanish(const Partition& alpha, int m, const RunConfig& cfg = {});

/// Closed-form sum of sgn(pi) over pi in S_n increasing at `indices`.
std::int64_t signed_sum_fixed_positions(int n, const std::vector<int>& indices);
/// The same sum by walking all of S_n.
std::int64_t signed_sum_fixed_positions_brute(int n, const std::vector<int>& indices);
/// Closed form against brute force for every index subset of [n].
VerificationReport check_signed_sum(int n, const RunConfig& cfg = {});

/// Generating polynomial of I_lambda by (v, d, h), and the signed t-polynomial of I^2.
SparsePolynomial imbalance_generating_polynomial(int n);
SparsePolynomial squared_t_polynomial(int n);
VerificationReport check_theorem8(int n, const RunConfig& cfg = {});

/// Sum over lambda of f(lambda/beta) f(lambda/alpha) with lambda/beta of n cells and
/// lambda/alpha of m cells, against the sum over k and mu of
/// C(n,k) C(m,k) k! f(alpha/mu) f(beta/mu) with alpha/mu of n-k and beta/mu of m-k cells.
VerificationReport check_counting_identity(const Partition& alpha, const Partition& beta, int n, int m,
                                           const RunConfig& cfg = {});

}  // namespace skewsign
