#include "matchbound/cli.hpp"

int main(int argc, char** argv) { return matchbound::cli::run(argc, argv); }
