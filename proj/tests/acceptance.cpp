// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "skewsign/shapes.hpp"
#include "skewsign/skewrs.hpp"
#include "skewsign/tableaux.hpp"
#include "skewsign/verify.hpp"
#include "skewsign/words.hpp"

using namespace skewsign;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
}

void absorb(Outcome& o, const VerificationReport& r) {
    if (r.pass()) return;
    o.pass = false;
    if (o.detail.size() < 400) {
        o.detail += " | " + r.identity + ":";
        for (const auto& [k, v] : r.parameters) o.detail += " " + k + "=" + v;
        if (!r.violations.empty()) o.detail += " " + r.violations.front();
    }
}

struct MainRuns {
    std::vector<VerificationReport> reports;
};

const MainRuns& main_runs() {
    static const MainRuns runs = [] {
        MainRuns m;
        for (const auto& alpha : enumerate_subshapes(Partition({3, 2, 1})))
            for (int n = 1; n <= 4; ++n) m.reports.push_back(check_theorem_main(alpha, n));
        return m;
    }();
    return runs;
}

std::int64_t total(const std::string& key) {
    std::int64_t t = 0;
    for (const auto& r : main_runs().reports) t += r.tally(key);
    return t;
}

}  // namespace

int main() {
    run(1, "worked example tableau signs", [] {
        const auto t = Tableau::from_entries(
            SkewShape(Partition({6, 4, 2, 2, 1}), Partition({4, 3, 2})),
            {{{1, 5}, 1}, {{1, 6}, 4}, {{2, 4}, 3}, {{4, 1}, 2}, {{4, 2}, 6}, {{5, 1}, 5}});
        std::vector<int> word;
        for (const auto& g : t.reading_word()) word.push_back(g.value);
        const auto inv = count_inversions(std::span<const GhostedValue>(t.reading_word()));
        const Sign s = tableau_sign(t), is = tableau_invsign(t);
        std::ostringstream os;
        os << "word 143265, inversions " << inv << ", sgn " << s << ", invsgn " << is;
        return Outcome{word == std::vector<int>{1, 4, 3, 2, 6, 5} && inv == 4 && s == 1 && is == -1, os.str()};
    });

    run(2, "completion of (124/423) with n=5", [] {
        const auto p = complete(PartialPermutation({1, 2, 4}, {4, 2, 3}, 5), 5);
        return Outcome{p.to_string() == "42135", "got " + p.to_string()};
    });

    run(3, "sign transfer over all triples, alpha in (3,2,1), n=1..4", [] {
        Outcome o;
        std::int64_t sign_bad = 0;
        for (const auto& r : main_runs().reports) {
            sign_bad += r.tally("sign_failures");
            if (r.tally("distinct_images") != r.instances || r.instances != r.tally("expected_images")) {
                o.pass = false;
            }
            absorb(o, r);
        }
        if (sign_bad != 0) o.pass = false;
        o.detail = std::to_string(main_runs().reports.size()) + " runs, " + std::to_string(total("triples")) +
                   " triples, " + std::to_string(total("distinct_images")) + " distinct images, sum f^2 = " +
                   std::to_string(total("expected_images")) + ", " + std::to_string(sign_bad) + " sign failures" +
                   o.detail;
        return o;
    });

    run(4, "round trips both ways on the same grid", [] {
        const auto rf = total("roundtrip_failures"), fr = total("pq_roundtrip_failures");
        const bool ok = rf == 0 && fr == 0 && total("pq_pairs") == total("expected_images") && total("triples") > 0;
        return Outcome{ok, std::to_string(total("triples")) + " reverse(forward), " + std::to_string(total("pq_pairs")) +
                               " forward(reverse), failures " + std::to_string(rf) + "/" + std::to_string(fr)};
    });

    run(5, "per-step sign ledgers", [] {
        const auto steps = total("ledger_steps"), bad = total("ledger_failures"), paths = total("path_failures");
        const bool ok = bad == 0 && paths == 0 && steps > 0 && total("external_steps") > 0 && total("internal_steps") > 0;
        return Outcome{ok, std::to_string(steps) + " steps (" + std::to_string(total("external_steps")) + " external, " +
                               std::to_string(total("internal_steps")) + " internal), " + std::to_string(bad) +
                               " ledger failures, " + std::to_string(paths) + " path failures"};
    });

    run(6, "outer/inner signed sums, |alpha|<=6, n<=5", [] {
        Outcome o;
        int runs = 0;
        for (int size = 0; size <= 6; ++size)
            for (const auto& alpha : enumerate_partitions(size))
                for (int n = 1; n <= 5; ++n) {
                    absorb(o, check_theorem_inout(alpha, n));
                    ++runs;
                }
        o.detail = std::to_string(runs) + " (alpha, n) pairs" + o.detail;
        return o;
    });

    run(7, "empty-anchor signed sum vanishes, n=2..7", [] {
        Outcome o;
        std::string sums;
        for (int n = 2; n <= 7; ++n) {
            const auto r = check_theorem2(n);
            absorb(o, r);
            sums += (n > 2 ? "," : "") + r.lhs.value_or("?");
        }
        o.detail = "sums " + sums + o.detail;
        return o;
    });

    run(8, "square and vanishing corollaries", [] {
        Outcome o;
        int squares = 0, vanish = 0;
        for (int size = 1; size <= 6; ++size)
            for (const auto& alpha : enumerate_partitions(size)) {
                absorb(o, check_corollary_square(alpha));
                ++squares;
            }
        for (int size = 0; size <= 4; ++size)
            for (const auto& alpha : enumerate_partitions(size)) {
                const int lowest = std::max(1, size % 2 == 0 ? size + 2 : size);
                for (int m = lowest; m <= 6; ++m) {
                    absorb(o, check_corollary_vanish(alpha, m));
                    ++vanish;
                }
            }
        o.detail = std::to_string(squares) + " square checks, " + std::to_string(vanish) + " vanishing checks" + o.detail;
        return o;
    });

    run(9, "domino generating polynomial n<=8, squared t-polynomial", [] {
        Outcome o;
        int squared = 0;
        for (int n = 0; n <= 8; ++n) {
            const auto r = check_theorem8(n);
            absorb(o, r);
            if (r.tally("imbalance_sum") != (std::int64_t{1} << (n / 2))) o.pass = false;
            squared += static_cast<int>(r.tally("squared_checked"));
        }
        // n in {2,3,4,6,7,8}
        if (squared != 6) o.pass = false;
        o.detail = "generating polynomial for n=0..8, squared polynomial for " + std::to_string(squared) +
                   " values of n (n=0 reported separately)" + o.detail;
        return o;
    });

    run(10, "fixed-position signed sums vs brute force, n<=6", [] {
        Outcome o;
        std::int64_t sets = 0;
        for (int n = 1; n <= 6; ++n) {
            const auto r = check_signed_sum(n);
            absorb(o, r);
            sets += r.instances;
        }
        o.detail = std::to_string(sets) + " index sets" + o.detail;
        return o;
    });

    run(11, "v, h, d against brute-force packing, |lambda|<=10", [] {
        Outcome o;
        int count = 0, bad = 0;
        for (int n = 0; n <= 10; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                ++count;
                const bool ok = v(lambda) == oracle::max_packing(lambda.vec(), 2, 1) &&
                                h(lambda) == oracle::max_packing(lambda.vec(), 1, 2) &&
                                d(lambda) == oracle::max_packing(lambda.vec(), 2, 2) &&
                                rsgn(SkewShape(lambda)) == parity_sign(v(lambda));
                if (!ok) {
                    ++bad;
                    o.pass = false;
                }
            }
        o.detail = std::to_string(count) + " partitions, " + std::to_string(bad) + " mismatches";
        return o;
    });

    run(12, "counting identity, alpha, beta in (2,1), n, m<=3", [] {
        Outcome o;
        int runs = 0;
        const auto subs = enumerate_subshapes(Partition({2, 1}));
        for (const auto& alpha : subs)
            for (const auto& beta : subs)
                for (int n = 0; n <= 3; ++n)
                    for (int m = 0; m <= 3; ++m) {
                        absorb(o, check_counting_identity(alpha, beta, n, m));
                        ++runs;
                    }
        o.detail = std::to_string(runs) + " parameter sets" + o.detail;
        return o;
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
