// bench: OpenMP kernels vs. the serial reference implementations,
// timed on S(chain(k)) views of growing order.
#include <chrono>
#include <cstdio>
#include <functional>

#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/kernels.hpp"

namespace mk = monoidkit;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  // warm-up once, then best of reps
  fn();
  double best = 1e18;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main() {
  std::printf("%-10s %-8s %-22s %12s %12s %8s\n", "base", "|S(M)|", "kernel",
              "omp (ms)", "serial (ms)", "speedup");
  for (std::size_t k = 3; k <= 9; ++k) {
    const mk::FiniteMonoid m = mk::make_chain_semilattice(k);
    const mk::SView sv(m);
    const int reps = sv.order() > 2000 ? 3 : 10;
    struct Row {
      const char* name;
      std::size_t max_order;  // the serial reference is deliberately naive
      std::function<void()> omp, serial;
    };
    const Row rows[] = {
        {"ideal_masks(R)", 1u << 13, [&] { mk::ideal_masks(sv, mk::Side::Right); },
         [&] { mk::ref::ideal_masks(sv, mk::Side::Right); }},
        {"star_partition(L*)", 200, [&] { mk::star_partition(sv, mk::Side::Right); },
         [&] { mk::ref::star_partition(sv, mk::Side::Right); }},
        {"idempotent_set", 1u << 13, [&] { mk::idempotent_set(sv); },
         [&] { mk::ref::idempotent_set(sv); }},
        {"regular_witnesses", 1u << 13, [&] { mk::regular_witnesses(sv); },
         [&] { mk::ref::regular_witnesses(sv); }},
    };
    for (const Row& r : rows) {
      if (sv.order() > r.max_order) continue;
      const double a = time_ms(r.omp, reps), b = time_ms(r.serial, reps);
      std::printf("chain%-5zu %-8zu %-22s %12.3f %12.3f %7.2fx\n", k, sv.order(),
                  r.name, a, b, b / a);
    }
  }
  return 0;
}
