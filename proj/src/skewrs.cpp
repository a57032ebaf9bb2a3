#include "skewsign/skewrs.hpp"

#include <algorithm>
#include <map>

namespace skewsign {

namespace {

std::vector<int> padded(const Partition& p, std::size_t length) {
    std::vector<int> out = p.vec();
    out.resize(std::max(length, out.size()), 0);
    return out;
}

Partition to_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::vector<int> plain_values(const Tableau& t) {
    std::vector<int> out;
    for (const auto& e : t.reading_word()) out.push_back(e.value);
    std::sort(out.begin(), out.end());
    return out;
}

Tableau relabel(const Tableau& t, const std::vector<int>& image_of) {
    Tableau::Rows rows = t.rows();
    for (auto& row : rows)
        for (auto& e : row) e = GhostedValue::num(image_of[static_cast<std::size_t>(e.value)]);
    return Tableau(t.shape(), std::move(rows));
}

Tableau demoted(const Tableau& u) {
    Tableau::Rows rows = u.rows();
    for (auto& row : rows)
        for (auto& e : row) e = GhostedValue::eps(e.value);
    return Tableau::unchecked(u.shape(), std::move(rows));
}

}  // namespace

bool TraceStep::ledger_holds() const {
    const Sign lhs = sign_p_after * sign_p_before;
    Sign rhs = sign_q_after * sign_q_before * rsgn_q_after * rsgn_q_before * parity_sign(q_size_before);
    if (kind == Kind::External) rhs *= parity_sign(m);
    return lhs == rhs;
}

std::string triple_violation(const Triple& x) {
    if (x.n < 0) return "n must be nonnegative";
    if (x.pi.bound() != x.n) return "pi is not bounded by n";
    if (x.t.shape() != x.u.shape()) return "t and u have different shapes";
    if (x.t.shape().outer() != x.alpha) return "shape of t and u is not alpha/mu for the given alpha";
    for (const Tableau* tab : {&x.t, &x.u}) {
        if (!tab->all_plain()) return "t and u must hold plain integers";
        if (auto msg = tab->violation(); !msg.empty()) return msg;
    }
    auto partitions_range = [n = x.n](const std::vector<int>& line, const std::vector<int>& entries) {
        std::vector<int> all = line;
        all.insert(all.end(), entries.begin(), entries.end());
        std::sort(all.begin(), all.end());
        if (static_cast<int>(all.size()) != n) return false;
        for (int i = 0; i < n; ++i)
            if (all[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    };
    if (!partitions_range(x.pi.bottom(), plain_values(x.t))) return "bottom(pi) and entries(t) do not partition 1..n";
    if (!partitions_range(x.pi.top(), plain_values(x.u))) return "top(pi) and entries(u) do not partition 1..n";
    return {};
}

InsertionState::InsertionState(const Tableau& t, const Tableau& u) : p_(t), q_(demoted(u)), alpha_(t.shape().outer()) {
    if (t.shape() != u.shape()) throw std::invalid_argument("P and Q must start on the same shape");
    if (!t.all_plain() || !u.all_plain()) throw std::invalid_argument("initial tableaux must hold plain integers");
}

Tableau InsertionState::q_unadjusted() const {
    Tableau::Rows rows;
    for (const auto& row : q_.rows()) {
        auto& out = rows.emplace_back();
        for (const auto& e : row)
            if (!e.is_eps()) out.push_back(e);
    }
    return Tableau::unchecked(SkewShape(q_.shape().outer(), alpha_), std::move(rows));
}

bool InsertionState::has_pending_internal() const {
    for (const auto& row : q_.rows())
        if (!row.empty() && row.front().is_eps()) return true;
    return false;
}

void InsertionState::require_step(int k) const {
    if (k <= max_plain_) {
        throw std::invalid_argument("step " + std::to_string(k) + " is not larger than every recorded step");
    }
}

std::vector<Cell> InsertionState::bump_from(int row, GhostedValue carried, int k, std::vector<int>& outer,
                                            const std::vector<int>& inner, Tableau::Rows& p_rows,
                                            Tableau::Rows& q_rows) {
    std::vector<Cell> path;
    auto inner_of = [&](int r) { return r <= static_cast<int>(inner.size()) ? inner[r - 1] : 0; };
    while (true) {
        if (row > static_cast<int>(outer.size())) {
            outer.push_back(0);
            p_rows.emplace_back();
            q_rows.emplace_back();
        }
        auto& prow = p_rows[row - 1];
        auto it = std::upper_bound(prow.begin(), prow.end(), carried);
        if (it == prow.end()) {
            prow.push_back(carried);
            q_rows[row - 1].push_back(GhostedValue::num(k));
            ++outer[row - 1];
            path.push_back({row, outer[row - 1]});
            return path;
        }
        path.push_back({row, inner_of(row) + static_cast<int>(it - prow.begin()) + 1});
        std::swap(*it, carried);
        ++row;
    }
}

TraceStep InsertionState::external_insert(int j, int k) {
    require_step(k);
    if (j < 1) throw std::invalid_argument("inserted value must be positive");
    const auto word = p_.reading_word();
    if (std::find(word.begin(), word.end(), GhostedValue::num(j)) != word.end()) {
        throw std::invalid_argument("value " + std::to_string(j) + " is already in P");
    }

    TraceStep s;
    s.kind = TraceStep::Kind::External;
    s.step = k;
    s.value = j;
    s.m = static_cast<int>(std::count_if(word.begin(), word.end(), [j](GhostedValue e) { return e.value < j; }));
    s.q_size_before = q_.entry_count();
    s.sign_p_before = tableau_sign(p_);
    s.sign_q_before = tableau_sign(q_);
    s.rsgn_q_before = rsgn(q_.shape());

    auto outer = p_.shape().outer().vec();
    const auto inner = padded(p_.shape().inner(), outer.size());
    auto p_rows = p_.rows();
    auto q_rows = q_.rows();
    s.bumping_path = bump_from(1, GhostedValue::num(j), k, outer, inner, p_rows, q_rows);
    s.new_cell = s.bumping_path.back();

    SkewShape shape(to_partition(outer), p_.shape().inner());
    p_ = Tableau::unchecked(shape, std::move(p_rows));
    q_ = Tableau::unchecked(std::move(shape), std::move(q_rows));
    ++step_;
    max_plain_ = k;

    s.sign_p_after = tableau_sign(p_);
    s.sign_q_after = tableau_sign(q_);
    s.rsgn_q_after = rsgn(q_.shape());
    return s;
}

TraceStep InsertionState::internal_insert(int k) {
    require_step(k);
    const auto q_entries = q_.entries();
    const auto smallest = std::min_element(q_entries.begin(), q_entries.end(),
                                           [](const auto& a, const auto& b) { return a.second < b.second; });
    if (smallest == q_entries.end() || !smallest->second.is_eps()) {
        throw std::invalid_argument("internal insertion needs an epsilon entry in Q");
    }
    const Cell source = smallest->first;
    const auto& inner_shape = p_.shape().inner();
    if (source.col != inner_shape.part(source.row) + 1 ||
        (source.row > 1 && inner_shape.part(source.row - 1) < source.col)) {
        throw std::logic_error("smallest epsilon entry is not at an inner corner");
    }

    TraceStep s;
    s.kind = TraceStep::Kind::Internal;
    s.step = k;
    s.removed_cell = source;
    s.q_size_before = q_.entry_count();
    s.sign_p_before = tableau_sign(p_);
    s.sign_q_before = tableau_sign(q_);
    s.rsgn_q_before = rsgn(q_.shape());

    auto outer = p_.shape().outer().vec();
    auto inner = padded(inner_shape, outer.size());
    auto p_rows = p_.rows();
    auto q_rows = q_.rows();
    const GhostedValue popped = p_rows[source.row - 1].front();
    s.value = popped.value;
    p_rows[source.row - 1].erase(p_rows[source.row - 1].begin());
    q_rows[source.row - 1].erase(q_rows[source.row - 1].begin());
    ++inner[source.row - 1];

    s.bumping_path = bump_from(source.row + 1, popped, k, outer, inner, p_rows, q_rows);
    s.new_cell = s.bumping_path.back();

    SkewShape shape(to_partition(outer), to_partition(inner));
    p_ = Tableau::unchecked(shape, std::move(p_rows));
    q_ = Tableau::unchecked(std::move(shape), std::move(q_rows));
    ++step_;
    max_plain_ = k;

    s.sign_p_after = tableau_sign(p_);
    s.sign_q_after = tableau_sign(q_);
    s.rsgn_q_after = rsgn(q_.shape());
    return s;
}

void InsertionState::check() const {
    if (p_.shape() != q_.shape()) throw std::logic_error("P and Q shapes diverged");
    if (auto msg = p_.violation(); !msg.empty()) throw std::logic_error("P invalid: " + msg);
    if (auto msg = q_.violation(); !msg.empty()) throw std::logic_error("Q invalid: " + msg);
}

ForwardResult forward(const Triple& x, const ForwardOptions& options) {
    if (auto msg = triple_violation(x); !msg.empty()) throw std::invalid_argument("malformed triple: " + msg);

    std::map<int, int> pairs;
    for (int i = 0; i < x.pi.size(); ++i) pairs.emplace(x.pi.top()[i], x.pi.bottom()[i]);
    std::map<int, Cell> u_cells;
    for (const auto& [cell, value] : x.u.entries()) u_cells.emplace(value.value, cell);

    InsertionState state(x.t, x.u);
    ForwardResult result;
    result.trace.reserve(static_cast<std::size_t>(x.n));
    for (int k = 1; k <= x.n; ++k) {
        TraceStep s;
        if (auto it = pairs.find(k); it != pairs.end()) {
            s = state.external_insert(it->second, k);
        } else {
            s = state.internal_insert(k);
            if (s.removed_cell != u_cells.at(k)) {
                throw std::logic_error("internal insertion at step " + std::to_string(k) +
                                       " did not start from the cell of U holding it");
            }
        }
        if (options.check_states) state.check();
        if (options.assert_ledgers && !s.ledger_holds()) {
            throw LedgerViolation("sign ledger fails at step " + std::to_string(k));
        }
        result.trace.push_back(std::move(s));
    }
    if (state.has_pending_internal()) throw std::logic_error("epsilon entries left after the last step");
    result.p = state.p();
    result.q = state.q();
    return result;
}

ForwardResult forward(const PartialPermutation& pi, const Tableau& t, const Tableau& u, int n, const Partition& alpha,
                      const ForwardOptions& options) {
    return forward(Triple{pi, t, u, n, alpha}, options);
}

Triple reverse(const StandardTableau& p, const StandardTableau& q, int n) {
    if (p.shape() != q.shape()) throw std::invalid_argument("P and Q have different shapes");
    p.check();
    q.check();
    if (!p.is_standard() || !q.is_standard()) throw std::invalid_argument("P and Q must be standard");
    if (p.entry_count() != n) throw std::invalid_argument("shape size differs from n");

    const Partition alpha = p.shape().inner();
    auto outer = p.shape().outer().vec();
    auto inner = padded(alpha, outer.size());
    auto p_rows = p.rows();

    std::vector<Cell> q_cell(static_cast<std::size_t>(n) + 1);
    for (const auto& [cell, value] : q.entries()) q_cell[static_cast<std::size_t>(value.value)] = cell;

    std::vector<int> top;
    std::vector<int> bottom;
    std::vector<std::pair<Cell, int>> u_entries;
    for (int k = n; k >= 1; --k) {
        const Cell corner = q_cell[static_cast<std::size_t>(k)];
        auto& corner_row = p_rows[corner.row - 1];
        if (corner_row.empty() || corner.col != outer[corner.row - 1]) {
            throw std::logic_error("entry " + std::to_string(k) + " of Q is not at an outer corner");
        }
        GhostedValue carried = corner_row.back();
        corner_row.pop_back();
        --outer[corner.row - 1];

        int row = corner.row - 1;
        for (; row >= 1; --row) {
            auto& prow = p_rows[row - 1];
            auto it = std::lower_bound(prow.begin(), prow.end(), carried);
            if (it == prow.begin()) break;
            std::swap(*std::prev(it), carried);
        }
        if (row == 0) {
            top.push_back(k);
            bottom.push_back(carried.value);
        } else {
            if (inner[row - 1] == 0) {
                throw std::invalid_argument("reverse bump stalls in row " + std::to_string(row) + " with no inner cell");
            }
            p_rows[row - 1].insert(p_rows[row - 1].begin(), carried);
            u_entries.push_back({{row, inner[row - 1]}, k});
            --inner[row - 1];
        }
    }
    std::reverse(top.begin(), top.end());
    std::reverse(bottom.begin(), bottom.end());

    Partition final_outer = to_partition(outer);
    p_rows.resize(static_cast<std::size_t>(final_outer.length()));
    if (final_outer != alpha) throw std::logic_error("reverse map did not return to the anchor shape");
    SkewShape shape(final_outer, to_partition(inner));
    Tableau t(shape, std::move(p_rows));
    Tableau u = Tableau::from_entries(shape, u_entries);
    return Triple{PartialPermutation(std::move(top), std::move(bottom), n), std::move(t), std::move(u), n, alpha};
}

Quadruple lemma6_forward(const Triple& x) {
    if (auto msg = triple_violation(x); !msg.empty()) throw std::invalid_argument("malformed triple: " + msg);
    return Quadruple{complete(x.pi, x.n), plain_values(x.u), standardize(x.t), standardize(x.u)};
}

Triple lemma6_backward(const Quadruple& quad) {
    const int n = quad.perm.size();
    if (quad.tstd.shape() != quad.ustd.shape()) throw std::invalid_argument("standard tableaux differ in shape");
    if (!quad.tstd.is_standard() || !quad.ustd.is_standard()) throw std::invalid_argument("tableaux must be standard");
    quad.tstd.check();
    quad.ustd.check();
    auto indices = quad.indexset;
    std::sort(indices.begin(), indices.end());
    if (static_cast<int>(indices.size()) != quad.tstd.entry_count()) {
        throw std::invalid_argument("index set size differs from the tableau size");
    }
    if (!is_increasing_at(quad.perm, indices)) throw std::invalid_argument("index set is not increasing under perm");

    std::vector<bool> chosen(static_cast<std::size_t>(n) + 1, false);
    for (int i : indices) chosen[static_cast<std::size_t>(i)] = true;
    std::vector<int> top;
    std::vector<int> bottom;
    for (int i = 1; i <= n; ++i) {
        if (chosen[static_cast<std::size_t>(i)]) continue;
        top.push_back(i);
        bottom.push_back(quad.perm(i));
    }
    std::vector<int> u_image(indices.size() + 1, 0);
    std::vector<int> t_image(indices.size() + 1, 0);
    for (std::size_t j = 0; j < indices.size(); ++j) {
        u_image[j + 1] = indices[j];
        t_image[j + 1] = quad.perm(indices[j]);
    }
    return Triple{PartialPermutation(std::move(top), std::move(bottom), n), relabel(quad.tstd, t_image),
                  relabel(quad.ustd, u_image), n, quad.tstd.shape().outer()};
}

}  // namespace skewsign
