#ifndef LARGESUB_REPORT_HPP
#define LARGESUB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "largesub/largeness.hpp"
#include "largesub/structure.hpp"

namespace largesub {

// Structured records (one JSON object each) and their text renderings.
// Key order is fixed, so dumps are byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const FiniteGroup& g, const Subgroup& s);
Json to_json(const FiniteGroup& g, const SeriesReport& series);
Json to_json(const FiniteGroup& g, const WitnessResult& w);
Json to_json(const FiniteGroup& g, const VerificationReport& report);
Json to_json(const ScanEntry& entry);
Json to_json(const PropBWitness& witness);

/// Order, centre, class sizes, normal subgroups, the four series, F, E, F*,
/// soluble radical, supersoluble residual and X0 membership.
Json group_info(const FiniteGroup& g);

std::string render_info(const Json& info);
std::string render(const VerificationReport& report);
std::string render(const ScanEntry& entry);
std::string render(const PropBWitness& witness);

}  // namespace largesub

#endif  // LARGESUB_REPORT_HPP
