#include "trackbench/cli/app.hpp"

int main(int argc, char** argv) {
    return trackbench::cli::run(argc, argv);
}
