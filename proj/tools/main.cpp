#include "udrf/cli.hpp"

int main(int argc, char** argv) { return udrf::cli_main(argc, argv); }
