#pragma once

#include "rpq/deformation.hpp"
#include "rpq/series.hpp"

namespace rpq {

// E(z) = sum_n eps2^C(n,2) z^n / [n]!
double exp_big_E(const DeformationSpec& d, double z, SeriesOptions options = {});

// e(z) = sum_n eps1^C(n,2) z^n / [n]!; for arik-coon requires |z| < 1/(1-q).
double exp_small_e(const DeformationSpec& d, double z, SeriesOptions options = {});

}  // namespace rpq
