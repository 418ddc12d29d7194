#include "commands.hpp"

int main(int argc, char** argv) { return spharea::cli::run(argc, argv); }
