#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewsign/shapes.hpp"
#include "skewsign/tableaux.hpp"
#include "skewsign/words.hpp"

namespace skewsign {

/// A point in the domain of the skew correspondence: pi is a partial
/// n-permutation, t and u are partial tableaux on alpha/mu, and
/// bottom(pi) + entries(t) = top(pi) + entries(u) = {1..n} as disjoint unions.
struct Triple {
    PartialPermutation pi;
    Tableau t;
    Tableau u;
    int n = 0;
    Partition alpha;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Empty string if the triple satisfies every domain condition, else the reason.
std::string triple_violation(const Triple& x);

/// The matching quadruple: a full permutation, the index set of an increasing
/// subsequence of it, and two standard tableaux on alpha/mu.
struct Quadruple {
    Permutation perm;
    std::vector<int> indexset;
    StandardTableau tstd;
    StandardTableau ustd;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct TraceStep {
    enum class Kind { External, Internal };

    Kind kind = Kind::External;
    int step = 0;                        // k, the value recorded in Q
    int value = 0;                       // a_1, the value that starts the bump
    std::vector<Cell> bumping_path;      // cells whose entry was replaced, ending at new_cell
    Cell new_cell;
    std::optional<Cell> removed_cell;    // internal only: the inner corner that left the shape
    int m = 0;                           // external only: entries of P_l smaller than a_1
    int q_size_before = 0;               // #Q_l, counting epsilon entries
    Sign sign_p_before = 1, sign_p_after = 1;
    Sign sign_q_before = 1, sign_q_after = 1;
    Sign rsgn_q_before = 1, rsgn_q_after = 1;

    /// sgn P ratio == sgn Q ratio * rsgn Q ratio * (-1)^#Q_l [* (-1)^m if external].
    bool ledger_holds() const;
};

class LedgerViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Insertion engine state. P starts as T, Q starts as U with every entry
/// demoted to the epsilon tier; an internal insertion consumes the smallest
/// epsilon entry of Q and launches from its cell.
class InsertionState {
public:
    InsertionState(const Tableau& t, const Tableau& u);

    const Tableau& p() const { return p_; }
    /// The adjusted Q: epsilon entries for unconsumed cells of U, plain step numbers elsewhere.
    const Tableau& q() const { return q_; }
    /// Q as the unadjusted algorithm keeps it: epsilon entries dropped, shape outer/alpha.
    Tableau q_unadjusted() const;
    const Partition& alpha() const { return alpha_; }
    int step() const { return step_; }
    bool has_pending_internal() const;

    /// Row-inserts j starting at row 1 and records k at the new outer cell.
    TraceStep external_insert(int j, int k);
    /// Pops the entry under the smallest epsilon of Q out of its inner corner
    /// and row-inserts it from the next row down, recording k at the new cell.
    TraceStep internal_insert(int k);

    /// Throws std::logic_error if p or q is not a valid tableau of a common shape.
    void check() const;

private:
    void require_step(int k) const;
    // Bumps `carried` into rows starting at `row`; returns the path and extends both tableaux.
    std::vector<Cell> bump_from(int row, GhostedValue carried, int k, std::vector<int>& outer,
                                const std::vector<int>& inner, Tableau::Rows& p_rows, Tableau::Rows& q_rows);

    Tableau p_;
    Tableau q_;
    Partition alpha_;
    int step_ = 0;
    int max_plain_ = 0;
};

struct ForwardOptions {
    bool assert_ledgers = true;  // throw LedgerViolation on the first failing step
    bool check_states = true;    // validate both tableaux after every step
};

struct ForwardResult {
    StandardTableau p;
    StandardTableau q;
    std::vector<TraceStep> trace;
};

ForwardResult forward(const Triple& x, const ForwardOptions& options = {});
ForwardResult forward(const PartialPermutation& pi, const Tableau& t, const Tableau& u, int n,
                      const Partition& alpha, const ForwardOptions& options = {});

/// Inverse of forward. Throws std::invalid_argument for mismatched or
/// non-standard input.
Triple reverse(const StandardTableau& p, const StandardTableau& q, int n);

Quadruple lemma6_forward(const Triple& x);
Triple lemma6_backward(const Quadruple& quad);

}  // namespace skewsign
