#include "cli.hpp"

int main(int argc, char** argv) { return geotsp::cli::run(argc, argv); }
