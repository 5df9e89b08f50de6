#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planewidth::cli
{
    // Exit codes.
    inline constexpr int ok = 0;
    inline constexpr int usage_error = 1;
    inline constexpr int check_failed = 2;  // verification or precondition failure
    inline constexpr int inconsistent = 3;  // internal consistency error

    // Runs one verb. `args` excludes the program name; "-" names stdin or stdout.
    [[nodiscard]] auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
        -> int;
}
