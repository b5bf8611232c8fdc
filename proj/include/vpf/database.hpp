#pragma once

#include <filesystem>
#include <string>

#include "vpf/chambers.hpp"

namespace vpf {

inline constexpr const char* kDatabaseFormat = "vpf-chamber-database";
inline constexpr int kDatabaseVersion = 1;

/// JSON text with fixed field order; every number is a decimal string.
std::string to_json(const ChamberTable& table);
/// Throws DatabaseFormat on malformed or inconsistent input.
ChamberTable from_json(const std::string& text);

void save_database(const ChamberTable& table, const std::filesystem::path& path);
ChamberTable load_database(const std::filesystem::path& path);

}  // namespace vpf
