#include "framescale/cli.hpp"

int main(int argc, char** argv) { return framescale::cli::run(argc, argv); }
