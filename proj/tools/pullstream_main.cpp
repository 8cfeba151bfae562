#include "pullstream/cli.hpp"

int main(int argc, char** argv) { return pullstream::cli::dispatch(argc, argv); }
