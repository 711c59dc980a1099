#include "lambshift/pipeline.hpp"

int main(int argc, char** argv) {
    return lambshift::cli_main(argc, argv);
}
