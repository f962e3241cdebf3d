#pragma once

namespace geoberg {

/** Parse arguments and run one subcommand; argv follows main() conventions.
    Returns the process exit code: 0 success, 1 usage or configuration
    error, 2 numerical failure, 3 release criterion failure (suite only). */
int run_cli(int argc, const char* const* argv);

} // namespace geoberg
