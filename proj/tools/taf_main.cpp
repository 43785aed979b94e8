#include "taf/cli.hpp"

int main(int argc, char** argv) { return taf::cli_main(argc, argv); }
