#pragma once

#include <string>
#include <vector>

#include "takiff/toda.hpp"

namespace takiff::cli {

// Exit codes: 0 success, 1 validation error, 2 runtime failure
// (positivity loss, nonfinite values).
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without program name

// CSV with one header row; floats printed with 17 significant digits so that
// re-reading reproduces the stored doubles bit for bit.
void emit_trajectory(const Trajectory& traj, const std::string& path);

}  // namespace takiff::cli
