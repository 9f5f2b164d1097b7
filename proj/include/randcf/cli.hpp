#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace randcf {

/// Dispatches one subcommand. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders reference table `id` (2-5) with the derived columns recomputed.
/// Cells that disagree with the stored reference text get footnote markers.
/// Invalid ids are rejected with std::invalid_argument.
std::string render_table(int id, bool color = false);

}  // namespace randcf
