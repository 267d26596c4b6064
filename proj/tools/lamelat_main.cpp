#include "lamelat/cli.hpp"

int main(int argc, char** argv) { return lamelat::cli::run(argc, argv); }
