#include "chordal/cli.hpp"

int main(int argc, char** argv) { return chordal::cli::run_main(argc, argv); }
