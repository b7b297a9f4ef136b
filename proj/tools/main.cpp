#include "nilrep/cli.hpp"

int main(int argc, char** argv) { return nilrep::cli::run(argc, argv); }
