#pragma once

#include <string>

#include <json.hpp>

#include "ftsp/oracle.hpp"
#include "ftsp/witness.hpp"

namespace ftsp {

/// Array of [in_num, in_exp, out_num, out_exp] breakpoint quadruples.
/// Numerators are JSON integers when they fit in 64 bits, decimal strings
/// otherwise; the parser accepts both.
nlohmann::ordered_json plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const nlohmann::json& j);

nlohmann::ordered_json witness_report_to_json(const WitnessReport& r);

nlohmann::ordered_json grid_set_to_json(const GridSet& g, const Alphabet& alphabet);

nlohmann::ordered_json tour_instance_to_json(const TourInstance& inst);

/// Reads element words (and the optional "metric" matrix; recomputed when
/// absent). The "alphabet" field selects a preset, defaulting to std2.
TourInstance tour_instance_from_json(const nlohmann::json& j, int max_radius);

/// Custom generating-set file: {"generators": [{"symbol","name","word"}...],
/// "pair": {"u","v","split"}}, generator words spelled over {x0,x1} as
/// a/A/b/B, the pair words over the declared symbols.
SupportPair pair_from_json_file(const std::string& path);

/// "std2", "x012", "mirror3", or "@file.json".
SupportPair pair_by_selector(const std::string& selector);

}  // namespace ftsp
