// Compares the OpenMP enumeration kernel against the serial reference.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "slopecalc/filtered.hpp"

using namespace slopecalc;
using clock_type = std::chrono::steady_clock;

int main(int argc, char** argv) {
    long r = argc > 1 ? std::atol(argv[1]) : 4;
    long max_den = argc > 2 ? std::atol(argv[2]) : 2 * r;
    long dim = 2 * r;
    SlopeMultiset hodge = hodge_from_filtration({{0, dim - 1}, {1, 1}});

    auto t0 = clock_type::now();
    auto serial = brute_enumerate_serial(dim, hodge, max_den);
    auto t1 = clock_type::now();
    auto parallel = brute_enumerate(dim, hodge, max_den);
    auto t2 = clock_type::now();

    auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    std::printf("dim=%ld max_den=%ld results=%zu\n", dim, max_den, serial.size());
    std::printf("serial:   %8.2f ms\n", ms(t0, t1));
    std::printf("parallel: %8.2f ms\n", ms(t1, t2));
    if (serial.size() != parallel.size()) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i)
        if (!(serial[i] == parallel[i])) {
            std::printf("MISMATCH at index %zu\n", i);
            return 1;
        }
    std::printf("outputs identical\n");
    return 0;
}
