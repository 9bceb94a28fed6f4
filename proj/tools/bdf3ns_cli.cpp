#include "bdf3ns/cli.hpp"

int main(int argc, char** argv) { return bdf3ns::cli_main(argc, argv); }
