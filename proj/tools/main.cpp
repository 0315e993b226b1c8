#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include "diskgeom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const diskgeom::JobSpec spec = diskgeom::parse_job(args);
        const diskgeom::RunOutput out = diskgeom::run_job(spec);
        if (out.svg) {
            std::ofstream f(out.svg_path, std::ios::binary);
            if (!f) {
                std::cerr << "UsageError: cannot write " << out.svg_path << "\n";
                return 2;
            }
            f << *out.svg;
        }
        std::cout << out.json;
        return 0;
    } catch (const diskgeom::UsageError& e) {
        std::cerr << "UsageError: " << e.what() << "\n";
        return 2;
    } catch (const diskgeom::ValidationError& e) {
        std::cerr << "ValidationError: " << e.what() << "\n";
        return 3;
    } catch (const diskgeom::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
