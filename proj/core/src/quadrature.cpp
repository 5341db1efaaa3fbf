#include "hmf/quadrature.hpp"

#include "hmf/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace hmf {

Estimate integrate(std::function<double(double)> const & f, double a, double b, double abs_tol, unsigned max_depth)
{
    if (a == b) return {0.0, 0.0};
    double err = 0.0, l1 = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, 1e-12, &err, &l1);
    double abs_err = err;
    if (!std::isfinite(v)) throw DomainError("quadrature", "non-finite quadrature result");
    if (abs_err > abs_tol && abs_err > 1e-12 * l1)
        throw BudgetExceededError("quadrature did not reach tolerance " + std::to_string(abs_tol));
    return {v, abs_err};
}

}  // namespace hmf
