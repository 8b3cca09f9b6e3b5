#pragma once

#include <string>

#include "iswb/appmap.hpp"
#include "iswb/classic.hpp"
#include "iswb/domconv.hpp"
#include "iswb/frame.hpp"
#include "iswb/io.hpp"
#include "iswb/isw.hpp"
#include "iswb/poset.hpp"
#include "iswb/states.hpp"

namespace iswb {

// Plain-text reports. Every function is deterministic byte for byte.
std::string isw_validation_text(const Isw& S, const ValidationReport& r);
std::string frame_validation_text(const Frame& F, const ValidationReport& r);
std::string cis_validation_text(const Cis& C, const ValidationReport& r);
std::string ais_validation_text(const Ais& A, const ValidationReport& r);
std::string map_validation_text(const ApproxMap& H, const MapValidationReport& r);
std::string poset_validation_text(const FinPoset& P);

std::string condition_text(const Isw& S, const ConditionReport& r);
std::string poset_report_text(const FinPoset& P, const PosetReport& r);
std::string domain_text(const Isw& S);
std::string roundtrip_text(const FinPoset& D, const RoundtripReport& r);
std::string dot_text(const FinPoset& P);

}  // namespace iswb
