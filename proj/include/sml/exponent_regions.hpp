#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sml/errors.hpp"

namespace sml {

// Atlas of the (1/p, Re alpha) plane for L^p boundedness of the maximal
// means: recorded necessary conditions against recorded sufficient ranges.
// Sufficiency inequalities are strict, necessity non-strict, exactly as
// stated in the sources; boundary points classify as OPEN.

enum class Verdict { SUFFICIENT_KNOWN, NECESSARY_VIOLATED, OPEN };

const char* to_string(Verdict v);

struct RegionVerdict {
    int n = 2;
    double p = 2.0;
    double re_alpha = 0.0;
    Verdict verdict = Verdict::OPEN;
    std::string triggering_condition;
};

// Necessary lower bound on Re alpha for p >= 2:
//   max( (1-n)/2 + 1/p , (1-n)/p ).
// The two expressions meet exactly at p = 2n/(n-1).
double necessary_threshold(int n, double p);

// Best (lowest) recorded sufficient threshold at (n, p):
//   p <= 2:  Re alpha > 1 - n + n/p                      (Stein)
//   p >= 2:  min of  Re alpha > (2-n)/p                  (Stein),
//            Re alpha > (1-n)/4 + (3-n)/(2p)  for 2 <= p <= 2(n+1)/(n-1),
//            Re alpha > (1-n)/p               for p >= 2(n+1)/(n-1)
//                                             (Miao-Yang-Zheng ranges).
// which, when non-null, receives the name of the winning inequality.
double sufficient_threshold(int n, double p, std::string* which = nullptr);

// Requires n >= 2, p > 1 (DomainError otherwise).
RegionVerdict classify(int n, double p, double re_alpha);

struct BoundaryRow {
    double p = 0.0;
    double inv_p = 0.0;
    std::optional<double> necessary; // recorded only for p >= 2
    double sufficient = 0.0;
    std::optional<double> gap;       // sufficient - necessary
};

std::vector<BoundaryRow> boundary_table(int n, std::span<const double> p_grid);

} // namespace sml
