#pragma once

#include "mdd/baselines.hpp"
#include "mdd/dataset.hpp"
#include "mdd/dubuc.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mdd {

// Reference accuracy is zero, so the gain ratio is undefined; callers
// report the pairing as such and keep it out of the plots.
struct UndefinedGainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MddMeasure {
    EpsilonSchedule schedule;
};
struct EuclideanMeasure {};
struct DtwMeasure {
    DtwConfig config;
};
struct LcssMeasure {
    LcssConfig config;
};

// A distance measure together with its configuration.
using MeasureSpec = std::variant<MddMeasure, EuclideanMeasure, DtwMeasure, LcssMeasure>;

double measure_distance(const MeasureSpec& measure, const TimeSeries& x, const TimeSeries& y);
std::string_view measure_name(const MeasureSpec& measure); // "mdd", "eud", "dtw", "lcss"
std::string measure_params(const MeasureSpec& measure);    // CSV params field

// Caps the OpenMP worker count for the evaluation loops. 0 restores the
// runtime default. Results are identical for any worker count.
void set_worker_count(int jobs);

// Index of the training instance nearest to the query; distance ties
// break toward the smallest index. `skip` excludes one training index
// (the held-out instance during cross-validation).
std::size_t nn1_index(std::span<const TimeSeries> train, const TimeSeries& query,
                      const MeasureSpec& measure,
                      std::optional<std::size_t> skip = std::nullopt);

std::string nn1_classify(std::span<const TimeSeries> train, const TimeSeries& query,
                         const MeasureSpec& measure);

// Leave-one-out 1-NN accuracy over the training set: the expected
// accuracy of the measure. Parallel over held-out instances.
double loocv_accuracy(std::span<const TimeSeries> train, const MeasureSpec& measure);
// Single-threaded reference with the identical contract; the tests pin
// the parallel version against it.
double loocv_accuracy_serial(std::span<const TimeSeries> train, const MeasureSpec& measure);

// Fraction of test instances whose nearest training neighbor carries the
// true label: the actual accuracy. Parallel over queries.
double test_accuracy(const LabeledDataset& ds, const MeasureSpec& measure);
double test_accuracy_serial(const LabeledDataset& ds, const MeasureSpec& measure);

// acc / ref. Throws UndefinedGainError when ref is zero.
double accuracy_gain(double acc, double ref);

enum class Quadrant { TP, FP, TN, FN };

// Gain pairs partition at 1: expected > 1 claims an improvement, actual
// > 1 delivers one. The boundary counts as the negative side.
Quadrant sharpshooter_quadrant(double expected_gain, double actual_gain);
std::string_view quadrant_name(Quadrant q);

struct RefGain {
    std::string ref;                     // reference measure name
    std::optional<double> expected_gain; // absent when the gain is undefined
    std::optional<double> actual_gain;
    std::optional<Quadrant> quadrant;
};

// One (dataset, measure) evaluation: accuracies plus gains against every
// other configured measure.
struct EvalReport {
    std::string dataset;
    std::string measure;
    std::string params;
    double expected_acc = 0.0;
    double actual_acc = 0.0;
    std::vector<RefGain> gains;
};

} // namespace mdd
