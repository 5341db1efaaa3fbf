#ifndef HMF_QUADRATURE_HPP
#define HMF_QUADRATURE_HPP

#include <functional>

namespace hmf {

/* A numerical value with an absolute error bound. */
struct Estimate {
    double value = 0.0;
    double error = 0.0;

    Estimate & operator+=(Estimate const & o)
    {
        value += o.value;
        error += o.error;
        return *this;
    }
};

/* Adaptive Gauss-Kronrod (G15/K31) on [a, b], finite or infinite limits.
 * The node set is fixed, so results are bit-stable across runs.  Throws
 * BudgetExceededError if the error estimate stays above `abs_tol` once the
 * recursion budget is exhausted. */
Estimate integrate(std::function<double(double)> const & f, double a, double b, double abs_tol = 1e-12,
                   unsigned max_depth = 18);

}  // namespace hmf

#endif  // HMF_QUADRATURE_HPP
