// Compares the serial reference kernels with the OpenMP ones on the
// two pairwise hot spots: building the full order matrix and reducing
// it to covers. Results must match bit for bit; timings are the point.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "clans/clan.hpp"
#include "clans/relation.hpp"

using namespace clans;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double best_of(int runs, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < runs; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void print_row(Signature sig, int count, const char* kernel, double serial,
               double parallel) {
  std::printf("(%d,%d)  %6d  %-20s  %10.4f  %12.4f  %7.2fx\n", sig.p, sig.q,
              count, kernel, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Signature> sigs = {{3, 3}, {4, 3}, {4, 4}};
  if (argc > 1) {
    if ((argc - 1) % 2 != 0) {
      std::fprintf(stderr, "usage: %s [p q]...\n", argv[0]);
      return 2;
    }
    sigs.clear();
    for (int i = 1; i + 1 < argc; i += 2)
      sigs.push_back({std::atoi(argv[i]), std::atoi(argv[i + 1])});
  }

  std::printf("sig    clans   kernel                serial [s]  parallel [s]  speedup\n");
  bool identical = true;
  for (const Signature sig : sigs) {
    const std::vector<Clan> nodes = enumerate_clans(sig);
    std::vector<RankProfile> profiles;
    profiles.reserve(nodes.size());
    for (const Clan& c : nodes) profiles.push_back(rank_profile(c));
    const int count = static_cast<int>(nodes.size());

    const double order_s =
        best_of(3, [&] { leq_matrix(profiles, Execution::serial); });
    const double order_p =
        best_of(3, [&] { leq_matrix(profiles, Execution::parallel); });
    const BitMatrix rel_s = leq_matrix(profiles, Execution::serial);
    const BitMatrix rel_p = leq_matrix(profiles, Execution::parallel);
    identical = identical && rel_s == rel_p;
    print_row(sig, count, "order matrix", order_s, order_p);

    const double red_s =
        best_of(3, [&] { transitive_reduction(rel_s, Execution::serial); });
    const double red_p =
        best_of(3, [&] { transitive_reduction(rel_s, Execution::parallel); });
    identical = identical &&
                transitive_reduction(rel_s, Execution::serial) ==
                    transitive_reduction(rel_s, Execution::parallel);
    print_row(sig, count, "transitive reduction", red_s, red_p);
  }
  if (!identical) {
    std::fprintf(stderr, "serial and parallel kernels disagree\n");
    return 3;
  }
  return 0;
}
