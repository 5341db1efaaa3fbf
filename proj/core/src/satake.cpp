#include "hmf/satake.hpp"

#include "hmf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hmf {

SatakeParam SatakeParam::real(PrimeLabel prime, std::int64_t prime_norm, double nu)
{
    if (!(nu > 0.0 && nu <= 0.5)) throw InvalidArgument("real Satake parameter must lie in (0, 1/2]");
    return {prime, prime_norm, false, nu};
}

SatakeParam SatakeParam::imag(PrimeLabel prime, std::int64_t prime_norm, double theta)
{
    SatakeParam s{prime, prime_norm, true, theta};
    if (!(theta >= 0.0 && theta <= s.max_theta() * (1 + 1e-15)))
        throw InvalidArgument("imaginary Satake parameter must lie in i[0, pi/(2 log N)]");
    s.value = std::min(theta, s.max_theta());
    return s;
}

double SatakeParam::max_theta() const { return std::numbers::pi / (2.0 * std::log(static_cast<double>(prime_norm))); }

bool HeckeEigenvalue::tempered() const { return lambda <= 2.0 * std::sqrt(static_cast<double>(prime_norm)); }

HeckeEigenvalue lambda_from_nu(SatakeParam const & nu)
{
    double N = static_cast<double>(nu.prime_norm);
    double lambda;
    if (nu.imaginary) {
        // N^{i theta} + N^{-i theta} = 2 cos(theta log N)
        lambda = 2.0 * std::sqrt(N) * std::cos(nu.value * std::log(N));
        lambda = std::max(lambda, 0.0);
    } else {
        // written as N^{1/2+nu} + N^{1/2-nu} so that nu = 1/2 gives N + 1 exactly
        lambda = std::pow(N, 0.5 + nu.value) + std::pow(N, 0.5 - nu.value);
    }
    return {nu.prime, nu.prime_norm, lambda};
}

SatakeParam nu_from_lambda(HeckeEigenvalue const & lambda)
{
    double N = static_cast<double>(lambda.prime_norm);
    double top = 1.0 + N;
    if (!(lambda.lambda >= 0.0 && lambda.lambda <= top))
        throw InvalidArgument("Hecke eigenvalue outside [0, 1 + N(p)]");
    double ratio = lambda.lambda / (2.0 * std::sqrt(N));
    double logN = std::log(N);
    SatakeParam out{lambda.prime, lambda.prime_norm, true, 0.0};
    if (ratio <= 1.0) {
        out.value = std::min(std::acos(ratio) / logN, out.max_theta());
    } else {
        out.imaginary = false;
        out.value = std::min(std::acosh(ratio) / logN, 0.5);
    }
    return out;
}

}  // namespace hmf
