#include "pettykit/harness.hpp"

int main(int argc, char** argv) { return pettykit::cli_main(argc, argv); }
