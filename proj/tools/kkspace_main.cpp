#include "kkspace/cli.hpp"

int main(int argc, char **argv) { return kkspace::run_cli(argc, argv); }
