#include "segsyz/cli.hpp"

int main(int argc, char** argv) { return segsyz::run_cli(argc, argv); }
