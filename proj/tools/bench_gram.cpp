#include "coset/modealg.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

using namespace coset;

namespace {

double seconds(void (*fill)(graded_module&), graded_module& m) {
    auto start = std::chrono::steady_clock::now();
    fill(m);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_grams(const graded_module& a, const graded_module& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (std::size_t g = 0; g < a.blocks.size(); ++g) {
        if (a.blocks[g].size() != b.blocks[g].size()) return false;
        for (std::size_t w = 0; w < a.blocks[g].size(); ++w)
            if (a.blocks[g][w].gram != b.blocks[g][w].gram) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    long k = 1, lambda = 0, cap = 6;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--level") && i + 1 < argc) k = std::stol(argv[++i]);
        else if (!std::strcmp(argv[i], "--spin") && i + 1 < argc) lambda = std::stol(argv[++i]);
        else if (!std::strcmp(argv[i], "--grade") && i + 1 < argc) cap = std::stol(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench-gram [--level k] [--spin l] [--grade N<=8]\n");
            return 2;
        }
    }

    graded_module serial = affine_su2_module(k, lambda, cap, false);
    graded_module parallel = serial;
    auto zero_grams = [](graded_module& m) {
        for (auto& per_grade : m.blocks)
            for (auto& block : per_grade)
                block.gram.assign(block.members.size(), ratvec(block.members.size(), 0));
    };
    zero_grams(serial);
    zero_grams(parallel);

    double ts = seconds(fill_gram_serial, serial);
    double tp = seconds(fill_gram_parallel, parallel);

    long entries = 0;
    for (const auto& per_grade : serial.blocks)
        for (const auto& block : per_grade)
            entries += (long)(block.members.size() * (block.members.size() + 1) / 2);

    std::printf("affine su(2) level %ld spin %ld, grades 0..%ld, %ld gram entries\n", k, lambda, cap,
                entries);
    std::printf("serial    %8.3f s\n", ts);
    std::printf("parallel  %8.3f s  (speedup %.2fx)\n", tp, tp > 0 ? ts / tp : 0.0);

    if (!same_grams(serial, parallel)) {
        std::printf("MISMATCH: kernels disagree\n");
        return 1;
    }
    std::printf("kernels agree entry for entry\n");
    return 0;
}
