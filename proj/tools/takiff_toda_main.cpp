#include "takiff/cli.hpp"

int main(int argc, char** argv) { return takiff::cli::run(argc, argv); }
