#include <chrono>
#include <cstdio>

#include "bundling/harness.hpp"

using namespace bundling;

namespace {

double run(const std::vector<HarnessItem>& items, bool parallel, int* failures) {
    auto t0 = std::chrono::steady_clock::now();
    HarnessReport rep = run_harness(items, -1, parallel);
    auto t1 = std::chrono::steady_clock::now();
    *failures = rep.failures;
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 400;
    std::vector<HarnessItem> items = default_suite(1, count);
    int f_serial = 0, f_parallel = 0;
    double ts = run(items, false, &f_serial);
    double tp = run(items, true, &f_parallel);
    printf("instances\t%zu\n", items.size());
    printf("serial_s\t%.3f\tfailures\t%d\n", ts, f_serial);
    printf("parallel_s\t%.3f\tfailures\t%d\n", tp, f_parallel);
    printf("speedup\t%.2fx\n", ts / tp);
    if (f_serial != f_parallel) {
        printf("MISMATCH: serial and parallel runs disagree\n");
        return 1;
    }
    return 0;
}
