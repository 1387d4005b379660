#pragma once

#include <cstdint>
#include <iosfwd>

namespace unideal::cli {

/// Scaled-down oracle-equivalence suite; prints one line per check and
/// returns the number of failed checks.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace unideal::cli
