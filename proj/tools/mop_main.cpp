#include <string>
#include <vector>

#include "mop/driver.hpp"

int main(int argc, char** argv) {
    return mop::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
