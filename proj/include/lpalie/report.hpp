#pragma once

// Text and JSON renderings shared by the command-line tool. Every number that
// appears in a human rendering also appears in the JSON one.

#include <string>

#include <json.hpp>

#include "lpalie/analysis.hpp"
#include "lpalie/cohn.hpp"
#include "lpalie/lie.hpp"

namespace lpalie {

inline constexpr const char* report_schema = "lpalie.report/1";

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json to_json(const BigInt& n);
nlohmann::ordered_json to_json(const IntVector& v);
/// Rationals as "a/b" strings, residues as numbers.
nlohmann::ordered_json to_json(const Scalar& s);
nlohmann::ordered_json to_json(const ScalarVector& v);

/// "(1/2, 0)" or "(1, 2) mod 3".
std::string format_scalars(const ScalarVector& v);

/// "0", "Z/3", "Z + Z/2 + Z/4".
std::string format_group(const K0Presentation& k0);
/// Unit class coordinates on the non-trivial summands.
IntVector visible_unit_class(const K0Presentation& k0);
nlohmann::ordered_json k0_json(const K0Presentation& k0);

std::string describe(const SimplicityWitness& w, const Graph& g);
nlohmann::ordered_json witness_json(const SimplicityWitness& w, const Graph& g);
nlohmann::ordered_json simplicity_json(const SimplicityReport& r, const Graph& g);

/// One sentence naming the condition that produced the verdict.
std::string describe(const LieVerdict& v);
nlohmann::ordered_json verdict_json(const LieVerdict& v, const Graph* g);

nlohmann::ordered_json graph_summary_json(const Graph& g);

}  // namespace lpalie
