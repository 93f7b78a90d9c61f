#ifndef BLOCHBOHR_MINIMIZE_HPP
#define BLOCHBOHR_MINIMIZE_HPP

#include <functional>

namespace bloch {

struct MinimizeResult {
    double x = 0.0;
    double value = 0.0;
};

// Coarse uniform scan over (lo, hi) followed by golden-section refinement of
// the best bracket down to interval width xtol.  The scan guards against
// multiple local minima; golden section then needs no derivative.
MinimizeResult minimize_scan_golden(const std::function<double(double)>& f, double lo, double hi,
                                    int scan_points = 1024, double xtol = 1e-12);

} // namespace bloch

#endif
