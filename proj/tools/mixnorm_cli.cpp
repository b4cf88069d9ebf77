#include "mixnorm/run_config.hpp"

int main(int argc, char** argv) { return mixnorm::run_cli(argc, argv); }
