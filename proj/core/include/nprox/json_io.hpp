#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

namespace nprox {

/// Round-trip text of a double ("%.17g"); "nan"/"inf" for non-finite values.
std::string format_double(double x);
double parse_double(const std::string& s);

/// 64-bit FNV-1a of the compact dump of j, as 16 hex digits.
std::string config_hash(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nprox
