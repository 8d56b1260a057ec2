#include "hyperloose/cli.hpp"

int main(int argc, char** argv) { return hyperloose::run_cli(argc, argv); }
