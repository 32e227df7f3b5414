#include "repi/cli.hpp"

int main(int argc, char** argv) { return repi::cli::run(argc, argv); }
