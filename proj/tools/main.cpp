#include "mulhopf/cli.hpp"

int main(int argc, char** argv) { return mulhopf::cli::run(argc, argv); }
