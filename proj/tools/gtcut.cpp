#include "gtcut/cli.hpp"

int main(int argc, char** argv) { return gtcut::cli_main(argc, argv); }
