#pragma once

#include <cmath>

#include "rpq/errors.hpp"

namespace rpq {

// Truncation contract shared by every infinite series in the library: stop once
// three consecutive terms fall below tol * |partial sum|.
struct SeriesOptions {
    double tol = 1e-12;
    int max_terms = 10000;
};

// Running sum with the three-small-terms stopping rule.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(SeriesOptions options) : options_(options) {}

    // Adds a term; returns true once the stopping rule has fired.
    bool add(double term) {
        if (!std::isfinite(term)) throw ConvergenceError("series term is not finite");
        sum_ += term;
        ++count_;
        if (!std::isfinite(sum_)) throw ConvergenceError("series partial sum overflowed");
        if (std::fabs(term) < options_.tol * std::fabs(sum_))
            ++small_run_;
        else
            small_run_ = 0;
        return small_run_ >= 3;
    }

    // Throws once the term budget is spent.
    void check_budget() const {
        if (count_ >= options_.max_terms)
            throw ConvergenceError("series did not converge within max_terms");
    }

    double sum() const { return sum_; }
    int count() const { return count_; }

private:
    SeriesOptions options_;
    double sum_ = 0.0;
    int count_ = 0;
    int small_run_ = 0;
};

}  // namespace rpq
