#pragma once

/*
 * Command line front end.  Exit status: 0 on success, 1 when a
 * verification fails, 2 on a usage or input error.  Diagnostics go to
 * the error stream; results go to the output stream.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace ym {

/* Truncation degree for verification verbs: YM_TRUNCATION_DEFAULT or 40.  Throws ParseError on a bad value. */
long default_truncation();

/* args excludes the program name. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ym
