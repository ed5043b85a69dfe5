#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cyclab/approximants.hpp"
#include "cyclab/branches.hpp"
#include "cyclab/classifier.hpp"
#include "cyclab/dilation.hpp"
#include "cyclab/series.hpp"
#include "cyclab/zerosets.hpp"

namespace cyclab {

using Json = nlohmann::json;

// {"coeffs": [[[re, im], ...], ...]}, outer index k, inner index l.
Json series_to_json(const BivariateSeries& f);
// Throws Parse on malformed input.
BivariateSeries series_from_json(const Json& j);

Json complex_to_json(Complex z);

Json zeroset_to_json(const TorusZeroSet& z, const StabilityReport& s);
Json singular_set_to_json(const std::vector<SingularPoint>& s);
Json track_to_json(const BranchTrack& t);
Json exponent_to_json(const ExponentFit& f);
Json hopf_to_json(const HopfReport& h);
Json cross_check_to_json(const CrossCheck& c);
Json verdict_to_json(const CyclicityVerdict& v);

// Shortest decimal that round-trips, independent of locale.
std::string format_double(double x);

// First line "# <config>", then the header and rows, "\n" endings.
std::string distance_csv(const DistanceSequence& seq, const Json& config);
std::string dilation_csv(const DilationSweep& sweep, const Json& config);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace cyclab
