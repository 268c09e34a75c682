#pragma once

#include "mdd/eval.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace mdd {

struct SharpshooterPoint {
    std::string dataset;
    double expected_gain = 1.0;
    double actual_gain = 1.0;
    Quadrant quadrant = Quadrant::TN;
};

// Expected-gain vs actual-gain scatter on log-scaled axes centered at
// gain 1, quadrant lines included. Every point carries data-dataset and
// data-quadrant attributes; `excluded` counts rows left out because
// their gains were undefined (recorded in a comment line). Output bytes
// are a pure function of the inputs.
void write_sharpshooter_svg(std::ostream& out, std::string_view ref_measure,
                            std::span<const SharpshooterPoint> points, std::size_t excluded);

struct MeasureAccuracy {
    std::string measure;
    double mean_expected = 0.0;
    double sem_expected = 0.0; // standard error of the mean
    double mean_actual = 0.0;
    double sem_actual = 0.0;
    std::size_t dataset_count = 0;
};

// Mean expected/actual accuracy per measure with +/- SEM whiskers.
void write_accuracy_bars_svg(std::ostream& out, std::span<const MeasureAccuracy> bars);

} // namespace mdd
