#include "impulse/cli.hpp"

int main(int argc, char** argv) { return impulse::cli::dispatch(argc, argv); }
