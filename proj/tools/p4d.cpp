#include "p4d/cli.hpp"

int main(int argc, char** argv) { return p4d::cli::dispatch(argc, argv); }
