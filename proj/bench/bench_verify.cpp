// Serial vs OpenMP composition checking.
#include <braidgs/verifier.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef BRAIDGS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace braidgs;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef BRAIDGS_HAVE_OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%3s %6s %11s %11s %11s %8s %6s\n", "n", "rules", "ambiguities", "serial_ms",
              "parallel_ms", "speedup", "same");
  for (int n = 4; n <= max_n; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    auto all = enumerate_ambiguities(rules);
    std::vector<Resolution> ser, par;
    double ts = best_of(reps, [&] { ser = resolve_all_serial(all, rules); });
    double tp = best_of(reps, [&] { par = resolve_all(all, rules); });
    bool same = ser.size() == par.size();
    for (std::size_t k = 0; same && k < ser.size(); ++k) {
      same = ser[k].trivial == par[k].trivial && ser[k].left_normal_form == par[k].left_normal_form &&
             ser[k].right_normal_form == par[k].right_normal_form;
    }
    std::printf("%3d %6zu %11zu %11.2f %11.2f %8.2f %6s\n", n, rules.size(), all.size(), ts, tp,
                ts / tp, same ? "yes" : "NO");
  }
  return 0;
}
