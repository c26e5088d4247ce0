#include "eclrc/cli.hpp"

int main(int argc, char** argv) { return eclrc::cli::run(argc, argv); }
