#include <hplane/cli.hpp>

int main(int argc, char** argv) {
    return hplane::cli_dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
