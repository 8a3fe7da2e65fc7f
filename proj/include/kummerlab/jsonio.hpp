#pragma once

// JSON views of the toolkit's reports. Every numeric field is an integer or
// a "num/den" string; nothing is ever serialized through floating point.

#include <json.hpp>

#include "kummerlab/boundary.hpp"
#include "kummerlab/curves.hpp"
#include "kummerlab/deform.hpp"
#include "kummerlab/genus2.hpp"
#include "kummerlab/humbert.hpp"
#include "kummerlab/plane.hpp"

namespace kummerlab {

using json = nlohmann::json;

json json_of_rat(const Rat& r);
std::vector<int64_t> curve_coeffs_i64(const PlaneCurve& c);

json json_of_summary(const FrobeniusSummary& s);
json json_of_plane(const KummerPlaneConfig& cfg);
json json_of_contact(const Contact& c);
json json_of_contact_report(const LineContactReport& r);
json json_of_class(const HumbertClass& h);
json json_of_bw_report(const BwReport& r);
json json_of_hit(const SearchHit& hit, const KummerPlaneConfig& cfg);
json json_of_fiber_graph(const SpecialFiberGraph& g);
json json_of_boundary_solution(const BoundarySolution& s);
json json_of_versal_report(const VersalFiberReport& r);

} // namespace kummerlab
