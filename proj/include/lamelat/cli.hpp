// Command-line front end.  Kept inside the library (the binary is a two-line
// main) so the argument handling and output formats are testable in-process.
//
// Subcommands: count, disc, sweep, hardy, vaaler, transform, classify.
// Scalar results print as JSON objects; sweep prints CSV with the fixed
// header "x,A,vol_term,H1,H2,P,R".  All floating output carries 15
// significant digits and is locale-independent, and sweeps are byte-identical
// for every worker count.
//
// Exit codes: 0 success, 1 domain/validation failure, 2 usage error.

#pragma once

namespace lamelat::cli {

int run(int argc, const char* const* argv);

}  // namespace lamelat::cli
