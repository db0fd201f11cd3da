#include "commands.hpp"

int main(int argc, char** argv) { return ineqlab::cli::run_cli(argc, argv); }
