#include "cli.hpp"

int main(int argc, char** argv) { return granred::cli::run(argc, argv); }
