#include "widthlab/cli.hpp"

int main(int argc, char** argv) { return widthlab::cli::run(argc, argv); }
