#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "crossfam/family.hpp"

namespace crossfam {

// Line-oriented family format:
//
//   n=3
//   -
//   1
//   1,3
//
// The first line gives the ground size; every further line is one member as
// strictly increasing comma-separated elements of [n], with "-" for the
// empty set. Blank lines are ignored. Duplicate members are rejected.

SetFamily parse_family_text(std::string_view text);
SetFamily parse_family_file(const std::filesystem::path& path);

std::string format_family(const SetFamily& f);
void write_family_file(const std::filesystem::path& path, const SetFamily& f);

}  // namespace crossfam
