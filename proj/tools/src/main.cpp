#include "rollfac_app/commands.hpp"

int main(int argc, char** argv) { return rf::app::run_cli(argc, argv); }
