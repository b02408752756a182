#include "contact/cli.hpp"

int main(int argc, char** argv) { return contact::run_cli(argc, argv); }
