// skewsign: sign-imbalance statistics, the skew RS correspondence, and the
// exhaustive identity checks, from the command line.
//
// Exit status: 0 success, 1 an identity or ledger check failed, 2 usage or schema error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewsign/io.hpp"
#include "skewsign/shapes.hpp"
#include "skewsign/skewrs.hpp"
#include "skewsign/tableaux.hpp"
#include "skewsign/verify.hpp"

namespace {

using namespace skewsign;
using skewsign::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string outer;
    std::string inner;
    std::string alpha;
    std::string beta;
    int n = 1;
    int m = 1;
    int max_alpha = 0;
    std::string format = "text";
    bool trace = false;
    bool assert_ledgers = true;
    bool grid = false;
    bool timing = false;
    int workers = 0;
    std::string out;
    std::string input;
    std::string identity;
    std::string enumerate_kind;
};

Partition parse_or_usage(const std::string& text, const char* what) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + what + ": " + e.what());
    }
}

SkewShape shape_or_usage(const Options& o) {
    const Partition outer = parse_or_usage(o.outer, "outer");
    const Partition inner = parse_or_usage(o.inner, "inner");
    if (!contains(inner, outer)) {
        throw UsageError("--inner " + inner.to_string() + " is not contained in --outer " + outer.to_string());
    }
    return SkewShape(outer, inner);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot open --out file " + o.out);
    file << text;
}

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open input file " + path);
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw io::SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
}

int cmd_imbalance(const Options& o) {
    const SkewShape shape = shape_or_usage(o);
    std::int64_t plus = 0;
    std::int64_t minus = 0;
    std::int64_t chess = 0;
    for_each_standard_tableau(shape, [&](const Tableau& t) {
        (tableau_sign(t) > 0 ? plus : minus) += 1;
        if (is_chess(t)) ++chess;
    });
    const std::int64_t f = count_standard_tableaux(shape);
    const std::int64_t imb = imbalance(shape);
    if (o.format == "json") {
        Json j{{"shape", io::to_json(shape)}, {"f", f},   {"imbalance", imb}, {"positive", plus},
               {"negative", minus},             {"chess", chess}};
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        emit(o, "outer,inner,f,imbalance,positive,negative,chess\n\"" + shape.outer().to_string() + "\",\"" +
                    shape.inner().to_string() + "\"," + std::to_string(f) + "," + std::to_string(imb) + "," +
                    std::to_string(plus) + "," + std::to_string(minus) + "," + std::to_string(chess) + "\n");
    } else {
        std::ostringstream os;
        os << "shape " << shape.to_string() << "\n"
           << "f=" << f << " I=" << imb << "\n"
           << "signs: +" << plus << " -" << minus << "\n"
           << "chess tableaux: " << chess << "\n";
        emit(o, os.str());
    }
    return kExitPass;
}

int cmd_stats(const Options& o) {
    const SkewShape shape = shape_or_usage(o);
    Json j{{"shape", io::to_json(shape)}, {"cells", static_cast<int>(shape.size())}, {"rsgn", rsgn(shape)}};
    if (shape.inner().empty()) {
        j["v"] = v(shape.outer());
        j["h"] = h(shape.outer());
        j["d"] = d(shape.outer());
    }
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "shape " << shape.to_string() << ": cells=" << shape.size() << " rsgn=" << rsgn(shape);
        if (shape.inner().empty()) {
            os << " v=" << v(shape.outer()) << " h=" << h(shape.outer()) << " d=" << d(shape.outer());
        }
        emit(o, os.str() + "\n");
    }
    return kExitPass;
}

int cmd_enumerate(const Options& o) {
    Json out = Json::array();
    if (o.enumerate_kind == "partitions") {
        for (const auto& p : enumerate_partitions(o.n)) out.push_back(io::to_json(p));
    } else if (o.enumerate_kind == "outer") {
        for (const auto& p : enumerate_outer_extensions(parse_or_usage(o.alpha, "alpha"), o.n)) out.push_back(io::to_json(p));
    } else if (o.enumerate_kind == "inner") {
        for (const auto& p : enumerate_inner_subshapes(parse_or_usage(o.alpha, "alpha"), o.n)) out.push_back(io::to_json(p));
    } else if (o.enumerate_kind == "tableaux") {
        for_each_standard_tableau(shape_or_usage(o), [&](const Tableau& t) { out.push_back(io::to_json(t)); });
    } else if (o.enumerate_kind == "partial-permutations") {
        for (const auto& p : enumerate_partial_permutations(o.n)) out.push_back(io::to_json(p.word()));
    } else {
        throw UsageError("unknown enumeration '" + o.enumerate_kind + "'");
    }
    emit(o, out.dump(o.format == "json" ? 2 : -1) + "\n");
    return kExitPass;
}

int cmd_rs_forward(const Options& o) {
    const Triple x = io::triple_from_json(read_json(o.input));
    if (auto msg = triple_violation(x); !msg.empty()) throw io::SchemaError("triple violates the domain: " + msg);
    ForwardResult result;
    try {
        result = forward(x, {.assert_ledgers = o.assert_ledgers, .check_states = true});
    } catch (const LedgerViolation& e) {
        std::cerr << "ledger violation: " << e.what() << "\n";
        return kExitViolation;
    }
    Json j = io::image_to_json(result, x.n);
    if (o.trace) j["trace"] = io::to_json(result.trace);
    emit(o, j.dump(2) + "\n");
    return kExitPass;
}

int cmd_rs_reverse(const Options& o) {
    const auto image = io::image_from_json(read_json(o.input));
    Triple x;
    try {
        x = reverse(image.p, image.q, image.n);
    } catch (const std::invalid_argument& e) {
        throw io::SchemaError(e.what());
    }
    emit(o, io::to_json(x).dump(2) + "\n");
    return kExitPass;
}

std::vector<VerificationReport> run_verify(const Options& o) {
    const RunConfig cfg{o.workers, o.assert_ledgers};
    std::vector<VerificationReport> reports;
    auto progress = [&](const VerificationReport& r) {
        if (o.grid) std::cerr << io::report_csv_row(r) << "\n";
        reports.push_back(r);
    };
    auto alpha_arg = [&] { return parse_or_usage(o.alpha, "alpha"); };
    auto all_up_to = [](int max_size, int min_size) {
        std::vector<Partition> out;
        for (int s = min_size; s <= max_size; ++s)
            for (auto& p : enumerate_partitions(s)) out.push_back(std::move(p));
        return out;
    };
    if (o.n < 0 || o.m < 0 || o.max_alpha < 0) throw UsageError("caps must be nonnegative");

    const std::string& id = o.identity;
    if (id == "theorem-main") {
        if (o.grid) {
            for (const auto& a : enumerate_subshapes(alpha_arg()))
                for (int n = 1; n <= o.n; ++n) progress(check_theorem_main(a, n, cfg));
        } else {
            if (o.n < 1) throw UsageError("--n must be positive");
            progress(check_theorem_main(alpha_arg(), o.n, cfg));
        }
    } else if (id == "inout") {
        if (o.grid) {
            for (const auto& a : all_up_to(o.max_alpha, 0))
                for (int n = 1; n <= o.n; ++n) progress(check_theorem_inout(a, n, cfg));
        } else {
            if (o.n < 1) throw UsageError("--n must be positive");
            progress(check_theorem_inout(alpha_arg(), o.n, cfg));
        }
    } else if (id == "corollary-square") {
        if (o.grid) {
            for (const auto& a : all_up_to(o.max_alpha, 1)) progress(check_corollary_square(a, cfg));
        } else {
            const Partition a = alpha_arg();
            if (a.empty()) throw UsageError("--alpha must be nonempty");
            progress(check_corollary_square(a, cfg));
        }
    } else if (id == "corollary-vanish") {
        auto lowest = [](const Partition& a) { return std::max(a.size() % 2 == 0 ? a.size() + 2 : a.size(), 1); };
        if (o.grid) {
            for (const auto& a : all_up_to(o.max_alpha, 0))
                for (int m = lowest(a); m <= o.m; ++m) progress(check_corollary_vanish(a, m, cfg));
        } else {
            const Partition a = alpha_arg();
            if (o.m < lowest(a)) {
                throw UsageError("--m " + std::to_string(o.m) + " is below the stated range m >= " +
                                 std::to_string(lowest(a)) + " for |alpha| = " + std::to_string(a.size()));
            }
            progress(check_corollary_vanish(a, o.m, cfg));
        }
    } else if (id == "theorem8") {
        if (o.grid) {
            for (int n = 0; n <= o.n; ++n) progress(check_theorem8(n, cfg));
        } else {
            progress(check_theorem8(o.n, cfg));
        }
    } else if (id == "signed-sum") {
        if (o.grid) {
            for (int n = 1; n <= o.n; ++n) progress(check_signed_sum(n, cfg));
        } else {
            if (o.n < 1) throw UsageError("--n must be positive");
            progress(check_signed_sum(o.n, cfg));
        }
    } else if (id == "counting") {
        const Partition a = alpha_arg();
        const Partition b = parse_or_usage(o.beta, "beta");
        if (o.grid) {
            for (const auto& sa : enumerate_subshapes(a))
                for (const auto& sb : enumerate_subshapes(b))
                    for (int n = 0; n <= o.n; ++n)
                        for (int m = 0; m <= o.m; ++m) progress(check_counting_identity(sa, sb, n, m, cfg));
        } else {
            progress(check_counting_identity(a, b, o.n, o.m, cfg));
        }
    } else {
        throw UsageError("unknown identity '" + id +
                         "'; expected theorem-main, inout, corollary-square, corollary-vanish, theorem8, counting, "
                         "or signed-sum");
    }
    return reports;
}

int cmd_verify(const Options& o) {
    const auto reports = run_verify(o);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();

    if (o.format == "json") {
        Json j;
        if (reports.size() == 1 && !o.grid) {
            j = io::to_json(reports.front(), o.timing);
        } else {
            j = Json::array();
            for (const auto& r : reports) j.push_back(io::to_json(r, o.timing));
        }
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = io::report_csv_header() + "\n";
        for (const auto& r : reports) text += io::report_csv_row(r) + "\n";
        emit(o, text);
    } else {
        std::string text;
        for (const auto& r : reports) text += io::report_text(r);
        if (o.grid) text += std::string(all_pass ? "ALL PASS" : "SOME CHECKS FAILED") + "\n";
        emit(o, text);
    }
    return all_pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign-imbalance of skew shapes and the skew Robinson-Schensted correspondence"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
    };

    auto* imb = app.add_subcommand("imbalance", "Count standard tableaux of a skew shape and their signed sum");
    imb->add_option("--outer", o.outer, "Outer partition, comma separated")->required();
    imb->add_option("--inner", o.inner, "Inner partition, comma separated (empty for the empty shape)");
    add_format(imb);

    auto* stats = app.add_subcommand("stats", "Shape statistics v, h, d and rsgn");
    stats->add_option("--outer", o.outer, "Outer partition")->required();
    stats->add_option("--inner", o.inner, "Inner partition");
    add_format(stats);

    auto* en = app.add_subcommand("enumerate", "List partitions, extensions, subshapes, tableaux or partial permutations");
    en->add_option("kind", o.enumerate_kind, "partitions | outer | inner | tableaux | partial-permutations")->required();
    en->add_option("--n", o.n, "Size parameter");
    en->add_option("--alpha", o.alpha, "Anchor partition for outer/inner");
    en->add_option("--outer", o.outer, "Outer partition for tableaux");
    en->add_option("--inner", o.inner, "Inner partition for tableaux");
    add_format(en);

    auto* rs = app.add_subcommand("rs", "Run the skew correspondence on a JSON file");
    rs->require_subcommand(1);
    auto* fwd = rs->add_subcommand("forward", "Map a triple {pi, t, u, n, alpha} to {P, Q}");
    fwd->add_option("input", o.input, "Input JSON file, or - for stdin")->required();
    fwd->add_flag("--trace", o.trace, "Include the per-step insertion ledger");
    fwd->add_flag("--assert-ledgers,!--no-assert-ledgers", o.assert_ledgers, "Fail on a sign-ledger mismatch");
    fwd->add_option("--out", o.out, "Write output to FILE instead of stdout");
    auto* rev = rs->add_subcommand("reverse", "Map {P, Q, n} back to a triple");
    rev->add_option("input", o.input, "Input JSON file, or - for stdin")->required();
    rev->add_option("--out", o.out, "Write output to FILE instead of stdout");

    auto* ver = app.add_subcommand("verify", "Run an identity check and report");
    ver->add_option("identity", o.identity,
                    "theorem-main | inout | corollary-square | corollary-vanish | theorem8 | counting | signed-sum")
        ->required();
    ver->add_option("--alpha", o.alpha, "Anchor partition (grid: upper bound for theorem-main and counting)");
    ver->add_option("--beta", o.beta, "Second anchor for counting");
    ver->add_option("--n", o.n, "n (grid: upper bound)");
    ver->add_option("--m", o.m, "m (grid: upper bound)");
    ver->add_option("--max-alpha", o.max_alpha, "Grid: largest |alpha| for inout and the corollaries");
    ver->add_flag("--grid", o.grid, "Sweep every parameter up to the given caps");
    ver->add_flag("--assert-ledgers,!--no-assert-ledgers", o.assert_ledgers, "Check per-step sign ledgers");
    ver->add_option("--workers", o.workers, "Worker threads (0 = all available, 1 = serial)")
        ->check(CLI::NonNegativeNumber);
    ver->add_flag("--timing", o.timing, "Include wall time in JSON reports");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*imb) return cmd_imbalance(o);
        if (*stats) return cmd_stats(o);
        if (*en) return cmd_enumerate(o);
        if (*fwd) return cmd_rs_forward(o);
        if (*rev) return cmd_rs_reverse(o);
        if (*ver) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
