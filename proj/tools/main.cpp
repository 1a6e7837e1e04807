#include "dualdec/cli.hpp"

int main(int argc, char** argv) { return dualdec::cli_main(argc, argv); }
