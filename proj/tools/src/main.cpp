#include "hopfalg_cli/cli.hpp"

int main(int argc, char** argv) { return hopfalg::cli::run(argc, argv); }
