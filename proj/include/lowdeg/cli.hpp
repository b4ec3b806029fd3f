#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lowdeg/surface_model.hpp"

namespace lowdeg::cli {

/// Exit statuses of `run`.
enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Built-in model by name: plane, p1p1, exp1, rank1:d, ci:d1,d2,... or ci
/// with `degrees` given as a class literal "[d1,d2,...]".
SurfaceModel builtin_model(const std::string& name, const std::optional<std::string>& degrees = std::nullopt);

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to the requested files, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowdeg::cli
