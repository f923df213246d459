#include "dubint/cli.hpp"

int main(int argc, char** argv) { return dubint::run_cli(argc, argv); }
