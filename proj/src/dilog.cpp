#include "dilogeq/dilog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dilogeq {

namespace {

void check_domain(double x, const char* fn) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(fn) + "(" + std::to_string(x) +
                                "): argument outside [0,1]");
}

// Power series, geometric convergence for x <= 1/2 (term ratio <= 1/2).
double li2_series(double x) {
    double sum = 0.0;
    double pow = x;
    for (int k = 1; k < 200; ++k) {
        double term = pow / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 0x1.0p-54) break;
        pow *= x;
    }
    return sum;
}

}  // namespace

double li2(double x) {
    check_domain(x, "li2");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return L1;
    if (x <= 0.5) return li2_series(x);
    // Reflection Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x); 1-x is exact
    // here, and log(x) = log1p(-(1-x)) keeps full precision near 1.
    double xc = 1.0 - x;
    return L1 - std::log1p(-xc) * std::log(xc) - li2_series(xc);
}

double rogers_l(double x) {
    check_domain(x, "rogers_l");
    // The log(x) log(1-x) term has analytic limit 0 at both endpoints.
    if (x < 1e-300) return 0.0;
    if (1.0 - x < 1e-15) return L1;
    return li2(x) + 0.5 * std::log(x) * std::log1p(-x);
}

}  // namespace dilogeq
