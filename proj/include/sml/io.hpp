#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "sml/exponent_regions.hpp"
#include "sml/scaling_lab.hpp"
#include "sml/spherical_means.hpp"

namespace sml {

// 17 significant digits: round-trip exact and byte-stable across runs.
std::string format_double(double v);
std::string format_complex(Complex v); // "re+imi" / "re-imi"

// CSV (comma separated, header row, LF endings) and JSON emitters with
// fixed column and key order.

void write_profile_csv(const RadialProfile& profile, std::ostream& os);

void write_means_csv(std::span<const MeansEvaluation> rows, std::ostream& os);

void write_decay_csv(const DecayCheck& check, std::ostream& os);

void write_scaling_json(const ScalingFit& fit, const MeansSpec& spec, std::optional<double> p,
                        double predicted, std::ostream& os);
void write_scaling_csv(const ScalingFit& fit, const MeansSpec& spec, std::optional<double> p,
                       double predicted, std::ostream& os);

void write_necessity_json(const NecessityReport& report, std::ostream& os);

// Region atlas rows; each row carries sample verdicts just below the
// necessary threshold, between the thresholds, and above the sufficient one.
void write_regions_csv(int n, std::span<const BoundaryRow> rows, std::ostream& os);

} // namespace sml
