// Timing comparison of the serial reference kernels against the OpenMP
// parallel ones, over the rationals and a prime field.
#include "pivotrace/matrix.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace pivotrace;

namespace {

Matrix random_matrix(const Field* f, size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-9, 9);
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = FieldElement::from_long(f, dist(rng));
    return m;
}

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_field(const Field* f, const char* name, size_t mul_n, size_t kron_n) {
    std::mt19937 rng(12345);
    Matrix a = random_matrix(f, mul_n, rng);
    Matrix b = random_matrix(f, mul_n, rng);
    Matrix c = random_matrix(f, kron_n, rng);
    Matrix d = random_matrix(f, kron_n, rng);

    Matrix ref, par;
    double t_mul_serial = time_ms([&] { ref = multiply_serial(a, b); });
    double t_mul_par = time_ms([&] { par = a * b; });
    std::printf("%-16s multiply %4zux%-4zu serial %8.2f ms  parallel %8.2f ms  equal=%s\n", name, mul_n, mul_n,
                t_mul_serial, t_mul_par, ref == par ? "yes" : "NO");

    double t_kron_serial = time_ms([&] { ref = kron_serial(c, d); });
    double t_kron_par = time_ms([&] { par = kron(c, d); });
    std::printf("%-16s kron     %4zux%-4zu serial %8.2f ms  parallel %8.2f ms  equal=%s\n", name, kron_n, kron_n,
                t_kron_serial, t_kron_par, ref == par ? "yes" : "NO");
}

}  // namespace

int main() {
    bench_field(Field::rationals(), "Q", 128, 48);
    bench_field(Field::prime(5), "F5", 192, 64);
    bench_field(Field::cyclotomic(8), "Q(zeta_8)", 48, 24);
    return 0;
}
