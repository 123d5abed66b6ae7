#ifndef KKSPACE_CLI_HPP
#define KKSPACE_CLI_HPP

namespace kkspace {

// Full command-line front end. Exit codes: 0 success, 2 configuration error,
// 3 I/O error, 4 numerical error.
int run_cli(int argc, const char *const *argv);

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_io_error = 3;
inline constexpr int exit_numerical_error = 4;

} // namespace kkspace

#endif
