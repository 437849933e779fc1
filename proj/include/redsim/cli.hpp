#pragma once

namespace redsim::cli {

// Parses argv, dispatches to the owning module, and maps errors onto exit
// codes: 0 ok, 1 usage, 2 no design available, 3 simulation underrun,
// 4 invalid parameters.
int run(int argc, const char* const* argv);

}  // namespace redsim::cli
