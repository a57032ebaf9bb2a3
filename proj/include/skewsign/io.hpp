#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewsign/shapes.hpp"
#include "skewsign/skewrs.hpp"
#include "skewsign/tableaux.hpp"
#include "skewsign/verify.hpp"
#include "skewsign/words.hpp"

namespace skewsign::io {

using Json = nlohmann::ordered_json;

/// Input that parses as JSON but does not fit the expected schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Partition& p);
Json to_json(const SkewShape& s);
Json to_json(const GhostedValue& v);
Json to_json(const Tableau& t);
Json to_json(const Biword& w);
Json to_json(const Permutation& p);
Json to_json(const Triple& x);
Json to_json(const TraceStep& s);
Json to_json(const std::vector<TraceStep>& trace);
/// {"P":..., "Q":..., "n":..., "alpha":...}
Json image_to_json(const ForwardResult& r, int n);
Json to_json(const VerificationReport& r, bool include_timing = false);

Partition partition_from_json(const Json& j);
SkewShape skew_shape_from_json(const Json& j);
GhostedValue ghosted_value_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Biword biword_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
/// Parses the triple schema; domain conditions are left to forward().
Triple triple_from_json(const Json& j);

struct ImagePair {
    Tableau p;
    Tableau q;
    int n = 0;
};
ImagePair image_from_json(const Json& j);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

}  // namespace skewsign::io
