#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hc3::cli {

enum ExitCode { kPass = 0, kFail = 1, kMalformed = 2, kBudget = 3 };

// Runs one command; argv[0] is the program name.
int run(const std::vector<std::string>& argv);

std::string sha256_hex(const std::string& bytes);

// Sorted-key, two-space JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace hc3::cli
