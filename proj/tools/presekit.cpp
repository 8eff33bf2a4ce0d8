#include <presekit/cli.hpp>

int main(int argc, char** argv) {
    return presekit::cli::main_guarded(argc, argv);
}
