#include "cli/commands.hpp"

#include "critline/numeric.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace critline;
    try {
        const cli::RunConfig cfg = cli::parse_command_line(argc, argv);
        return cli::dispatch(cfg, std::cout);
    } catch (const cli::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
