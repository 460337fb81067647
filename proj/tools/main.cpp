#include "pm/cli.hpp"

int main(int argc, char** argv) { return pm::cli_main(argc, argv); }
