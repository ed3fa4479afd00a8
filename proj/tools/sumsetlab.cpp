#include "sumsetlab/cli.hpp"

int main(int argc, char** argv) { return sumsetlab::cli::run(argc, argv); }
