#pragma once

#include <string>

#include "cohom1/hitchin.hpp"
#include "cohom1/io.hpp"
#include "cohom1/profiles.hpp"

namespace cohom1 {

// t,f1,...,h3 rows on [t0, t1] (uses the Weyl-symmetric continuation)
Csv sample_profile(const MetricProfile& pr, double t0, double t1, int grid_n);

// t,F1,G1,H1,...,H3 rows; throws where a block is singular
Csv sample_inverse(const MetricProfile& pr, double t0, double t1, int grid_n);

enum class HitchinEmit { Curvature, Profile, Embedding };
HitchinEmit parse_hitchin_emit(const std::string& s);

// curvature: t,sec1,sec2,sec3 on the interior grid of [0, 3L]
// profile:   t,h on [0, 3L]
// embedding: t,rho,z on [0, 3L]
Csv sample_hitchin(const HitchinAnalysis& an, HitchinEmit emit, int grid_n);

// "A:B" where each endpoint is a number optionally suffixed by L
void parse_range(const std::string& text, double L, double* t0, double* t1);

}  // namespace cohom1
