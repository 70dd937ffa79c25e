#include "divlab/cli.hpp"

int main(int argc, char** argv) { return divlab::run_cli(argc, argv); }
