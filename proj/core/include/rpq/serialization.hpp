#pragma once

#include <string>

#include "rpq/combinatorics.hpp"
#include "rpq/distributions.hpp"

namespace rpq {

// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

std::string to_json(const DeformationSpec& d);
std::string to_json(const StirlingTable& table);
std::string to_json(const PmfTable& pmf);
std::string to_json(const MomentReport& report);

// Comment header lines ("# family=...") followed by "k,p_k" rows.
std::string to_csv(const PmfTable& pmf);

// Inverse of to_json(PmfTable). Custom deformations cannot be restored.
PmfTable pmf_from_json(const std::string& text);

bool operator==(const PmfTable& a, const PmfTable& b);

}  // namespace rpq
