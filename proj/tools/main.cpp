#include "cli.hpp"

int main(int argc, char** argv) { return gtpt::cli::dispatch(argc, argv); }
