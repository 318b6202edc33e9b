#include "cosk/cli.hpp"

int main(int argc, char** argv) { return cosk::cli::run(argc, argv); }
