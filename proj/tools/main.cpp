#include "commands.hpp"

int main(int argc, char** argv) { return ctwin::cli::run(argc, argv); }
