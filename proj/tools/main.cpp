#include "cli.hpp"

int main(int argc, char** argv) { return wod::cli::run(argc, argv); }
