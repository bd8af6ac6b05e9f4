#include "cheb/cli.hpp"

int main(int argc, char** argv) { return cheb::run_cli(argc, argv); }
