#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "elana/interpretation.h"

namespace elana::io {

using Json = nlohmann::ordered_json;

// Interpretation documents (JSON). Domain ids are 1-based in documents.
Interpretation interpretation_from_json(const Json& doc);
Json interpretation_to_json(const Interpretation& interp);

Interpretation parse_interpretation(std::string_view text);
std::string print_interpretation(const Interpretation& interp);

std::string read_file(const std::filesystem::path& path);
Interpretation load_interpretation(const std::filesystem::path& path);

}  // namespace elana::io
