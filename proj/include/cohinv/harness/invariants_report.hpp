#pragma once

#include "cohinv/graded_class.hpp"
#include "cohinv/hyperell.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cohinv::harness {

inline constexpr const char* kInvariantsSchema = "cohinv.invariants/1";

/// {"render": "...", "symbols": [["2","3"], ...]}; symbol entries are the
/// squarefree integer representatives.
nlohmann::json class_to_json(const GradedClass& c);

/// Rebuilds the formal sum from the "symbols" array.
GradedClass class_from_json(const nlohmann::json& j);

/// Invariants report for one curve:
///   {"schema": "cohinv.invariants/1", "coeffs": [...], "genus": g,
///    "alpha": [{"degree": i, "render": ..., "symbols": ...}, ...],
///    "tau": {...} or {"error": "OutsideU0"},
///    "beta": {..., "point": "p0:p1"} or {"error": ...}}
nlohmann::json invariants_to_json(const BinaryForm& f, const CurveInvariants& inv);

/// Plain-text report, one block per invariant.
std::string invariants_to_text(const BinaryForm& f, const CurveInvariants& inv);

/// Parses "c0,c1,...,cn" into a binary form.
BinaryForm parse_coeff_list(const std::string& text);

/// Parses "p0:p1".
ProjectivePoint parse_point(const std::string& text);

}  // namespace cohinv::harness
