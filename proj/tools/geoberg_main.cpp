#include "geoberg/runner.hpp"

int main(int argc, char** argv) { return geoberg::run_cli(argc, argv); }
