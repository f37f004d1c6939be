#include "hg_cli/cli.hpp"

int main(int argc, char** argv) { return hg::cli::run(argc, argv); }
