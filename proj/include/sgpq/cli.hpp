#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgpq {

/// Entry point behind main(): parses argv-style arguments (program name not
/// included), runs one verb, writes the report to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on domain errors, 2 on usage errors.
///
/// Verbs: quotient, dpartitions, gamma, bounds, sharpness, sym-closure,
/// sym-cover, two-gens-d3, selftest.
/// Flags: --gens <csv>, --d <int>, --rho <int>, --json, --seed <int>,
/// --max-d <int>.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgpq
