// Benchmark of the OpenMP kernels against their serial references:
// the signature integral (parallel over sample points) and the Arf zero
// count (parallel over the 2^(2g) quadratic-form evaluations).
//
//   bench_kernels [genus] [resolution]     defaults: 5 2048

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "conclab/knot_invariants.hpp"

using namespace conclab;

namespace {

double seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

SeifertMatrix random_seifert(std::mt19937_64& rng, std::size_t g) {
    IntMatrix a = IntMatrix::zero(2 * g, 2 * g);
    for (std::size_t k = 0; k < g; ++k) a.at(2 * k, 2 * k + 1) = 1;
    for (std::size_t r = 0; r < 2 * g; ++r)
        for (std::size_t c = 0; c <= r; ++c) {
            const Int v(static_cast<long>(rng() % 5) - 2);
            a.at(r, c) += v;
            a.at(c, r) += v;
        }
    return SeifertMatrix(std::move(a), "bench");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t genus = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;
    const int resolution = argc > 2 ? std::atoi(argv[2]) : 2048;
    if (genus < 1 || 2 * genus > 24 || resolution < 16) {
        std::fprintf(stderr, "usage: bench_kernels [genus 1..12] [resolution >= 16]\n");
        return 2;
    }

    std::mt19937_64 rng(2024);
    const SeifertMatrix a = random_seifert(rng, genus);
    std::printf("matrix: %zux%zu, resolution %d\n", a.size(), a.size(), resolution);

    SignatureIntegral par_res, ser_res;
    const double t_par = seconds([&] { par_res = signature_integral(a, resolution); });
    const double t_ser = seconds([&] { ser_res = signature_integral_serial(a, resolution); });
    if (par_res.estimate != ser_res.estimate || par_res.jump_count != ser_res.jump_count) {
        std::fprintf(stderr, "FAIL: signature integral kernels disagree\n");
        return 1;
    }
    std::printf("signature_integral: parallel %8.3fs  serial %8.3fs  speedup %.2fx\n", t_par,
                t_ser, t_ser / t_par);

    int arf_par = 0, arf_ser = 0;
    const double ta_par = seconds([&] { arf_par = arf(a); });
    const double ta_ser = seconds([&] { arf_ser = arf_serial(a); });
    if (arf_par != arf_ser) {
        std::fprintf(stderr, "FAIL: arf kernels disagree\n");
        return 1;
    }
    std::printf("arf:                parallel %8.3fs  serial %8.3fs  speedup %.2fx\n", ta_par,
                ta_ser, ta_ser / ta_par);
    std::printf("outputs agree\n");
    return 0;
}
