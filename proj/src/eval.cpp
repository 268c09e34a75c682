#include "mdd/eval.hpp"

#include "mdd/format.hpp"

#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The evaluation loops run under OpenMP, so anything that could throw is
// rejected before the parallel region.
void check_applicable(const MeasureSpec& measure, std::size_t length) {
    std::visit(
        [length](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MddMeasure>) {
                if (m.schedule.back() >= static_cast<int>(length)) {
                    throw std::invalid_argument("every scale must be smaller than the series length");
                }
            } else if constexpr (std::is_same_v<T, DtwMeasure>) {
                if (m.config.window && *m.config.window < 0) {
                    throw std::invalid_argument("warping window must be non-negative");
                }
            } else if constexpr (std::is_same_v<T, LcssMeasure>) {
                if (!(m.config.match_epsilon > 0.0)) {
                    throw std::invalid_argument("LCSS match threshold must be positive");
                }
                if (m.config.delta && *m.config.delta < 0) {
                    throw std::invalid_argument("LCSS temporal window must be non-negative");
                }
            }
        },
        measure);
}

void check_uniform_length(std::span<const TimeSeries> series, std::size_t length) {
    for (const auto& s : series) {
        if (s.size() != length) {
            throw std::invalid_argument("series must have the same length");
        }
    }
}

std::size_t nearest_index(std::span<const TimeSeries> train, const TimeSeries& query,
                          const MeasureSpec& measure, std::optional<std::size_t> skip) {
    double best = kInf;
    std::size_t best_j = train.size();
    for (std::size_t j = 0; j < train.size(); ++j) {
        if (skip && *skip == j) continue;
        const double d = measure_distance(measure, train[j], query);
        if (d < best) {
            best = d;
            best_j = j;
        }
    }
    return best_j;
}

double accuracy_from_flags(const std::vector<unsigned char>& correct) {
    const auto hits = std::accumulate(correct.begin(), correct.end(), 0LL);
    return static_cast<double>(hits) / static_cast<double>(correct.size());
}

} // namespace

double measure_distance(const MeasureSpec& measure, const TimeSeries& x, const TimeSeries& y) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MddMeasure>) {
                return mdd(x, y, m.schedule);
            } else if constexpr (std::is_same_v<T, EuclideanMeasure>) {
                return euclidean(x, y);
            } else if constexpr (std::is_same_v<T, DtwMeasure>) {
                return dtw(x, y, m.config);
            } else {
                return lcss_distance(x, y, m.config);
            }
        },
        measure);
}

std::string_view measure_name(const MeasureSpec& measure) {
    return std::visit(
        [](const auto& m) -> std::string_view {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MddMeasure>) {
                return "mdd";
            } else if constexpr (std::is_same_v<T, EuclideanMeasure>) {
                return "eud";
            } else if constexpr (std::is_same_v<T, DtwMeasure>) {
                return "dtw";
            } else {
                return "lcss";
            }
        },
        measure);
}

std::string measure_params(const MeasureSpec& measure) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MddMeasure>) {
                return m.schedule.to_string();
            } else if constexpr (std::is_same_v<T, EuclideanMeasure>) {
                return {};
            } else if constexpr (std::is_same_v<T, DtwMeasure>) {
                return m.config.window ? "window=" + std::to_string(*m.config.window)
                                       : "window=unconstrained";
            } else {
                std::string out = "eps=" + format_double(m.config.match_epsilon);
                out += ";delta=";
                out += m.config.delta ? std::to_string(*m.config.delta) : "none";
                return out;
            }
        },
        measure);
}

void set_worker_count(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) {
        omp_set_num_threads(jobs);
    }
#else
    (void)jobs;
#endif
}

std::size_t nn1_index(std::span<const TimeSeries> train, const TimeSeries& query,
                      const MeasureSpec& measure, std::optional<std::size_t> skip) {
    const std::size_t effective = train.size() - (skip && *skip < train.size() ? 1 : 0);
    if (effective == 0) {
        throw std::invalid_argument("1-NN needs a non-empty training set");
    }
    check_uniform_length(train, query.size());
    check_applicable(measure, query.size());
    return nearest_index(train, query, measure, skip);
}

std::string nn1_classify(std::span<const TimeSeries> train, const TimeSeries& query,
                         const MeasureSpec& measure) {
    return train[nn1_index(train, query, measure)].label();
}

double loocv_accuracy(std::span<const TimeSeries> train, const MeasureSpec& measure) {
    if (train.size() < 2) {
        throw std::invalid_argument("leave-one-out needs at least two training instances");
    }
    check_uniform_length(train, train.front().size());
    check_applicable(measure, train.front().size());

    std::vector<unsigned char> correct(train.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(train.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::size_t j = nearest_index(train, train[idx], measure, idx);
        correct[idx] = train[j].label() == train[idx].label() ? 1 : 0;
    }
    return accuracy_from_flags(correct);
}

double loocv_accuracy_serial(std::span<const TimeSeries> train, const MeasureSpec& measure) {
    if (train.size() < 2) {
        throw std::invalid_argument("leave-one-out needs at least two training instances");
    }
    check_uniform_length(train, train.front().size());
    check_applicable(measure, train.front().size());

    std::vector<unsigned char> correct(train.size(), 0);
    for (std::size_t i = 0; i < train.size(); ++i) {
        const std::size_t j = nearest_index(train, train[i], measure, i);
        correct[i] = train[j].label() == train[i].label() ? 1 : 0;
    }
    return accuracy_from_flags(correct);
}

double test_accuracy(const LabeledDataset& ds, const MeasureSpec& measure) {
    if (ds.test.empty()) {
        throw std::invalid_argument("test split must not be empty");
    }
    if (ds.train.empty()) {
        throw std::invalid_argument("1-NN needs a non-empty training set");
    }
    check_uniform_length(ds.train, ds.test.front().size());
    check_uniform_length(ds.test, ds.test.front().size());
    check_applicable(measure, ds.test.front().size());

    std::vector<unsigned char> correct(ds.test.size(), 0);
    const std::span<const TimeSeries> train(ds.train);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(ds.test.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::size_t j = nearest_index(train, ds.test[idx], measure, std::nullopt);
        correct[idx] = ds.train[j].label() == ds.test[idx].label() ? 1 : 0;
    }
    return accuracy_from_flags(correct);
}

double test_accuracy_serial(const LabeledDataset& ds, const MeasureSpec& measure) {
    if (ds.test.empty()) {
        throw std::invalid_argument("test split must not be empty");
    }
    if (ds.train.empty()) {
        throw std::invalid_argument("1-NN needs a non-empty training set");
    }
    check_uniform_length(ds.train, ds.test.front().size());
    check_uniform_length(ds.test, ds.test.front().size());
    check_applicable(measure, ds.test.front().size());

    std::vector<unsigned char> correct(ds.test.size(), 0);
    const std::span<const TimeSeries> train(ds.train);
    for (std::size_t i = 0; i < ds.test.size(); ++i) {
        const std::size_t j = nearest_index(train, ds.test[i], measure, std::nullopt);
        correct[i] = ds.train[j].label() == ds.test[i].label() ? 1 : 0;
    }
    return accuracy_from_flags(correct);
}

double accuracy_gain(double acc, double ref) {
    if (!(ref > 0.0)) {
        throw UndefinedGainError("reference accuracy is zero; gain is undefined");
    }
    return acc / ref;
}

Quadrant sharpshooter_quadrant(double expected_gain, double actual_gain) {
    if (expected_gain > 1.0) {
        return actual_gain > 1.0 ? Quadrant::TP : Quadrant::FP;
    }
    return actual_gain > 1.0 ? Quadrant::FN : Quadrant::TN;
}

std::string_view quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::TP: return "TP";
        case Quadrant::FP: return "FP";
        case Quadrant::TN: return "TN";
        case Quadrant::FN: return "FN";
    }
    return "TN";
}

} // namespace mdd
