#include "sbound/cli.hpp"

int main(int argc, char** argv) { return sbound::cli::main(argc, argv); }
