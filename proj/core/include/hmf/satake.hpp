#ifndef HMF_SATAKE_HPP
#define HMF_SATAKE_HPP

#include "hmf/ideal.hpp"

#include <cstdint>

namespace hmf {

/* Local parameter nu_p of a character X_p -> N(p)^nu of H_p.
 *
 * The parameter is only defined up to nu -> -nu and nu -> nu + pi i/log N.
 * The canonical representative is either real in (0, 1/2] or purely
 * imaginary, nu = i*theta with theta in [0, pi/(2 log N)]; nu = 0 is
 * stored as imaginary. */
struct SatakeParam {
    PrimeLabel prime;
    std::int64_t prime_norm = 2;
    bool imaginary = true;
    double value = 0.0;  // nu itself when real, theta when imaginary

    static SatakeParam real(PrimeLabel prime, std::int64_t prime_norm, double nu);
    static SatakeParam imag(PrimeLabel prime, std::int64_t prime_norm, double theta);
    double max_theta() const;
};

struct HeckeEigenvalue {
    PrimeLabel prime;
    std::int64_t prime_norm = 2;
    double lambda = 0.0;

    /* lambda^2 - N(p), the eigenvalue of T(p^2). */
    double tp2_eigenvalue() const { return lambda * lambda - static_cast<double>(prime_norm); }
    bool tempered() const;
};

/* lambda = sqrt(N) (N^nu + N^-nu), in [0, 1 + N]. */
HeckeEigenvalue lambda_from_nu(SatakeParam const & nu);
/* Inverse; throws InvalidArgument outside [0, 1 + N]. */
SatakeParam nu_from_lambda(HeckeEigenvalue const & lambda);

}  // namespace hmf

#endif  // HMF_SATAKE_HPP
