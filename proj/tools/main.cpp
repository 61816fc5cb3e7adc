#include "hypercode/cli.hpp"

int main(int argc, char** argv) { return hypercode::cli::run(argc, argv); }
