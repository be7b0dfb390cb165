#pragma once

namespace geotsp::cli {

// Exit codes: 0 success, 1 operation failure/infeasible, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace geotsp::cli
