#include "skewsign/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace skewsign::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

// Wraps construction so library argument errors surface as schema errors.
template <typename Fn>
auto build(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string params_string(const VerificationReport& r) {
    std::string out;
    for (const auto& [k, v] : r.parameters) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.vec()); }

Json to_json(const SkewShape& s) { return Json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

Json to_json(const GhostedValue& v) {
    if (v.is_eps()) return Json{{"eps", v.value}};
    return Json(v.value);
}

Json to_json(const Tableau& t) {
    Json entries = Json::array();
    for (const auto& [cell, value] : t.entries()) entries.push_back(Json::array({cell.row, cell.col, to_json(value)}));
    return Json{{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}, {"entries", entries}};
}

Json to_json(const Biword& w) { return Json{{"top", w.top()}, {"bottom", w.bottom()}}; }

Json to_json(const Permutation& p) { return Json(p.images()); }

Json to_json(const Triple& x) {
    return Json{{"pi", to_json(x.pi.word())}, {"t", to_json(x.t)}, {"u", to_json(x.u)}, {"n", x.n},
                {"alpha", to_json(x.alpha)}};
}

Json to_json(const TraceStep& s) {
    auto cell = [](Cell c) { return Json::array({c.row, c.col}); };
    Json path = Json::array();
    for (const auto& c : s.bumping_path) path.push_back(cell(c));
    Json j{{"kind", s.kind == TraceStep::Kind::External ? "external" : "internal"},
           {"step", s.step},
           {"value", s.value},
           {"bumping_path", path},
           {"new_cell", cell(s.new_cell)},
           {"removed_cell", s.removed_cell ? cell(*s.removed_cell) : Json(nullptr)},
           {"m", s.m},
           {"q_size_before", s.q_size_before},
           {"sign_p_before", s.sign_p_before},
           {"sign_p_after", s.sign_p_after},
           {"sign_q_before", s.sign_q_before},
           {"sign_q_after", s.sign_q_after},
           {"rsgn_q_before", s.rsgn_q_before},
           {"rsgn_q_after", s.rsgn_q_after},
           {"ledger_holds", s.ledger_holds()}};
    return j;
}

Json to_json(const std::vector<TraceStep>& trace) {
    Json out = Json::array();
    for (const auto& s : trace) out.push_back(to_json(s));
    return out;
}

Json image_to_json(const ForwardResult& r, int n) {
    return Json{{"P", to_json(r.p)}, {"Q", to_json(r.q)}, {"n", n}, {"alpha", to_json(r.p.shape().inner())}};
}

Json to_json(const VerificationReport& r, bool include_timing) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json j{{"identity", r.identity},
           {"parameters", params},
           {"pass", r.pass()},
           {"instances", r.instances},
           {"lhs", r.lhs ? Json(*r.lhs) : Json(nullptr)},
           {"rhs", r.rhs ? Json(*r.rhs) : Json(nullptr)},
           {"tallies", Json(r.tallies)},
           {"violations", r.violations},
           {"notes", r.notes}};
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

Partition partition_from_json(const Json& j) {
    auto parts = int_array(j, "partition");
    return build([&] { return Partition(std::move(parts)); });
}

SkewShape skew_shape_from_json(const Json& j) {
    auto outer = partition_from_json(field(j, "outer"));
    auto inner = partition_from_json(field(j, "inner"));
    return build([&] { return SkewShape(std::move(outer), std::move(inner)); });
}

GhostedValue ghosted_value_from_json(const Json& j) {
    if (j.is_object()) return GhostedValue::eps(as_int(field(j, "eps"), "eps value"));
    return GhostedValue::num(as_int(j, "tableau entry"));
}

Tableau tableau_from_json(const Json& j) {
    const SkewShape shape = skew_shape_from_json(j);
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw SchemaError("entries must be an array of [row, col, value]");
    Tableau::Rows rows(static_cast<std::size_t>(shape.outer().length()));
    for (int r = 1; r <= shape.outer().length(); ++r) {
        rows[r - 1].assign(static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r)), GhostedValue{});
    }
    std::vector<bool> seen(static_cast<std::size_t>(shape.size()), false);
    std::size_t count = 0;
    const auto all = cells(shape);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3) throw SchemaError("each entry must be [row, col, value]");
        const Cell c{as_int(e[0], "row"), as_int(e[1], "col")};
        if (!shape.contains_cell(c)) throw SchemaError("entry cell lies outside the shape");
        const auto idx = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), c) - all.begin());
        if (seen[idx]) throw SchemaError("cell listed twice");
        seen[idx] = true;
        ++count;
        rows[c.row - 1][c.col - shape.inner().part(c.row) - 1] = ghosted_value_from_json(e[2]);
    }
    if (count != all.size()) throw SchemaError("entries do not cover the shape");
    return build([&] { return Tableau(shape, std::move(rows)); });
}

Biword biword_from_json(const Json& j) {
    auto top = int_array(field(j, "top"), "top");
    auto bottom = int_array(field(j, "bottom"), "bottom");
    return build([&] { return Biword(std::move(top), std::move(bottom)); });
}

Permutation permutation_from_json(const Json& j) {
    auto images = int_array(j, "permutation");
    return build([&] { return Permutation(std::move(images)); });
}

Triple triple_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    auto word = biword_from_json(field(j, "pi"));
    Triple x;
    x.pi = build([&] { return PartialPermutation(word, n); });
    x.t = tableau_from_json(field(j, "t"));
    x.u = tableau_from_json(field(j, "u"));
    x.n = n;
    x.alpha = partition_from_json(field(j, "alpha"));
    return x;
}

ImagePair image_from_json(const Json& j) {
    return ImagePair{tableau_from_json(field(j, "P")), tableau_from_json(field(j, "Q")), as_int(field(j, "n"), "n")};
}

std::string report_csv_header() { return "identity,parameters,pass,instances,lhs,rhs,violations"; }

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << csv_escape(r.identity) << ',' << csv_escape(params_string(r)) << ',' << (r.pass() ? "true" : "false") << ','
       << r.instances << ',' << csv_escape(r.lhs.value_or("")) << ',' << csv_escape(r.rhs.value_or("")) << ','
       << r.tally("violations");
    return os.str();
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity << " [" << params_string(r) << "]: " << (r.pass() ? "PASS" : "FAIL") << ", " << r.instances
       << " instances";
    if (r.lhs || r.rhs) os << ", lhs " << r.lhs.value_or("-") << " | rhs " << r.rhs.value_or("-");
    os << ", " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
    for (const auto& [k, v] : r.tallies) os << "  " << k << ": " << v << '\n';
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
    for (const auto& v : r.violations) os << "  violation: " << v << '\n';
    return os.str();
}

}  // namespace skewsign::io
