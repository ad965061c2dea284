#pragma once

// JSON renderings shared by the subcommands.

#include <json.hpp>

#include "klsf/cli.hpp"
#include "klsf/formulas.hpp"
#include "klsf/progression.hpp"
#include "klsf/witness.hpp"

namespace klsf::cli {

using Json = nlohmann::ordered_json;

Json element_json(const GroupSpec& g, std::size_t index);
Json members_json(const Subset& s);
Json bounds_json(const formulas::BoundReport& r);
Json int_bounds_json(const formulas::IntBounds& b);
Json witness_json(const witness::LiftedWitness& w, KLParams kl);
Json progression_json(const oracle::Progression& p);
Json scan_row_json(const ScanRow& row);

/// Header line plus one line per row, comma separated.
std::string scan_csv_header();
std::string scan_row_csv(const ScanRow& row);

}  // namespace klsf::cli
