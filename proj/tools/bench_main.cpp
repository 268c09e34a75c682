#include "mdd/dataset.hpp"
#include "mdd/dubuc.hpp"
#include "mdd/eval.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

mdd::TimeSeries random_walk(std::mt19937& rng, std::size_t d, std::string label = {}) {
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<double> v(d);
    double acc = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
        acc += step(rng);
        v[t] = acc;
    }
    return mdd::TimeSeries(std::move(v), std::move(label));
}

// Per-call seconds: repeat until the batch takes at least ~50 ms, best
// of three batches.
template <typename F>
double time_call(F&& fn) {
    fn(); // warmup
    double best = 1e100;
    for (int batch = 0; batch < 3; ++batch) {
        int reps = 0;
        const auto start = Clock::now();
        std::chrono::duration<double> elapsed{};
        do {
            fn();
            ++reps;
            elapsed = Clock::now() - start;
        } while (elapsed.count() < 0.05);
        best = std::min(best, elapsed.count() / reps);
    }
    return best;
}

volatile double sink = 0.0;

void bench_envelope_kernels() {
    std::printf("envelope kernels (monotonic queue vs direct window scan)\n");
    std::printf("%8s %8s %14s %14s %9s\n", "d", "eps", "queue (ms)", "naive (ms)", "ratio");
    std::mt19937 rng(7);
    const std::size_t d = 100000;
    const auto x = random_walk(rng, d);
    for (int eps : {4, 64, 512}) {
        const double t_queue = time_call([&] {
            auto env = mdd::compute_envelope(x, eps);
            sink = env.upper.back();
        });
        const double t_naive = time_call([&] {
            auto env = mdd::naive_envelope_oracle(x, eps);
            sink = env.upper.back();
        });
        std::printf("%8zu %8d %14.3f %14.3f %8.1fx\n", d, eps, t_queue * 1e3, t_naive * 1e3,
                    t_naive / t_queue);
    }
    std::printf("\n");
}

void bench_mdd_scaling() {
    std::printf("mdd wall time vs series length (schedule 1,2,4,8)\n");
    std::printf("%8s %14s %9s\n", "d", "mdd (ms)", "ratio");
    const mdd::EpsilonSchedule schedule(std::vector<int>{1, 2, 4, 8});
    std::mt19937 rng(11);
    double prev = 0.0;
    for (std::size_t d = 1000; d <= 64000; d *= 2) {
        const auto x = random_walk(rng, d);
        const auto y = random_walk(rng, d);
        const double t = time_call([&] { sink = mdd::mdd(x, y, schedule); });
        if (prev > 0.0) {
            std::printf("%8zu %14.4f %8.2fx\n", d, t * 1e3, t / prev);
        } else {
            std::printf("%8zu %14.4f %9s\n", d, t * 1e3, "-");
        }
        prev = t;
    }
    std::printf("\n");
}

void bench_eval_parallel() {
    std::printf("1-NN evaluation, OpenMP loop vs serial reference\n");

    std::mt19937 rng(23);
    mdd::LabeledDataset ds;
    ds.name = "synthetic";
    ds.length = 512;
    for (int i = 0; i < 60; ++i) {
        ds.train.push_back(random_walk(rng, ds.length, i % 2 == 0 ? "a" : "b"));
    }
    for (int i = 0; i < 120; ++i) {
        ds.test.push_back(random_walk(rng, ds.length, i % 2 == 0 ? "a" : "b"));
    }
    ds.classes = {"a", "b"};

    const mdd::MeasureSpec measure =
        mdd::MddMeasure{mdd::generic_epsilon_schedule(ds.length, 0.4)};

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    const double serial_test = time_call([&] { sink = mdd::test_accuracy_serial(ds, measure); });
    const double parallel_test = time_call([&] { sink = mdd::test_accuracy(ds, measure); });
    const double serial_loocv =
        time_call([&] { sink = mdd::loocv_accuracy_serial(ds.train, measure); });
    const double parallel_loocv = time_call([&] { sink = mdd::loocv_accuracy(ds.train, measure); });

    const bool identical =
        mdd::test_accuracy(ds, measure) == mdd::test_accuracy_serial(ds, measure) &&
        mdd::loocv_accuracy(ds.train, measure) == mdd::loocv_accuracy_serial(ds.train, measure);

    std::printf("%-18s %14s %14s %9s\n", "kernel", "serial (ms)", "parallel (ms)", "speedup");
    std::printf("%-18s %14.2f %14.2f %8.2fx\n", "test accuracy", serial_test * 1e3,
                parallel_test * 1e3, serial_test / parallel_test);
    std::printf("%-18s %14.2f %14.2f %8.2fx\n", "loocv accuracy", serial_loocv * 1e3,
                parallel_loocv * 1e3, serial_loocv / parallel_loocv);
    std::printf("threads=%d  results identical: %s\n\n", threads, identical ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernel and evaluation benchmarks"};
    int jobs = 0;
    app.add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    CLI11_PARSE(app, argc, argv);
    mdd::set_worker_count(jobs);

    bench_envelope_kernels();
    bench_mdd_scaling();
    bench_eval_parallel();
    return 0;
}
