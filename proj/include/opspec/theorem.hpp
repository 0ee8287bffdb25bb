#pragma once

#include <map>
#include <string>
#include <vector>

#include "opspec/json_io.hpp"
#include "opspec/spectra.hpp"

namespace opspec {

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// One evaluated statement. Sides sharing a group must carry equal values.
struct TheoremSide {
    std::string label;
    bool value = false;
    int group = 0;
};

struct TheoremReport {
    std::string theorem;
    std::string instance;
    std::vector<TheoremSide> sides;
    std::vector<TheoremSide> info;          ///< evaluated for reference, never affects the verdict
    std::map<std::string, Region> spectra;  ///< every spectrum the sides read
    bool consistent = false;
};

/// Throws Error("unknown-theorem") or Error("uncomputable-spectrum").
TheoremReport check(const std::string& id, SpectraEngine& engine, const std::string& instance = "");
TheoremReport check(const std::string& id, const ExprPtr& e, const std::string& instance = "");

/// Every id over every instance, in library order then id order.
std::vector<TheoremReport> sweep(const std::vector<std::string>& ids,
                                 const std::vector<NamedExpr>& instances = instance_library());

std::size_t count_inconsistent(const std::vector<TheoremReport>& reports);

Json report_to_json(const TheoremReport& r);

}  // namespace opspec
