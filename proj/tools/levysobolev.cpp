#include "levysobolev/cli.hpp"

int main(int argc, char** argv) { return levysobolev::cli::main(argc, argv); }
