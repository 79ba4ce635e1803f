#include <algorithm>
#include <iostream>
#include <vector>

#include "wreathlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json_output = std::find(args.begin(), args.end(), "--json") != args.end();
    wreathlab::CommandResult result = wreathlab::run_command(args);
    if (json_output) {
        std::cout << result.to_json() << "\n";
    } else {
        std::cout << result.human_text;
        if (!result.human_text.empty() && result.human_text.back() != '\n') std::cout << "\n";
    }
    if (result.status != wreathlab::CommandStatus::Ok && !json_output)
        std::cerr << "status: " << result.status_string() << "\n";
    return result.exit_code();
}
