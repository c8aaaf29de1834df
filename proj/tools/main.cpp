#include "gaborgram/cli/commands.hpp"

int main(int argc, char** argv) { return gabor::cli::run_cli(argc, argv); }
