#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app;
    touchdown::cli::Options opts;
    touchdown::cli::build_app(app, opts);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return touchdown::cli::run(app, opts, std::cout, std::cerr);
}
