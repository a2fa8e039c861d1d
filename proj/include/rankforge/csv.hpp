#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rankforge/core.hpp"

namespace rankforge {

/// Loads a decision matrix from CSV: header row names the criteria, first
/// column holds the alternative names, body cells are numeric. Empty weights
/// mean uniform (1.0 per criterion). Parse errors cite the 1-based row and
/// the column name.
DecisionMatrix load_matrix_csv(const std::filesystem::path& path,
                               const std::vector<Objective>& objectives,
                               const std::vector<double>& weights);

/// One parsed CSV record; quoted fields may contain commas and doubled
/// quotes. Used by the loader and exposed for the report readers in tests.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace rankforge
