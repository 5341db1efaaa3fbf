#ifndef HMF_GLOBAL_HECKE_HPP
#define HMF_GLOBAL_HECKE_HPP

#include "hmf/hecke.hpp"
#include "hmf/ideal.hpp"

#include <map>

namespace hmf {

/* T(a^2) for a = prod p^{k_p}; an empty map is the identity. */
struct GlobalHeckeOperator {
    struct Factor {
        std::int64_t prime_norm;
        int exponent;
    };
    std::map<PrimeLabel, Factor> factors;

    void add(PrimeLabel prime, std::int64_t prime_norm, int exponent);
    /* prod_p sum_{j=0}^{2k_p} N(p)^j, the number of cosets in Delta(a^2). */
    double coset_bound() const;
};

/* prod_p S_{p,2k_p}(lambda_p).  Throws MissingPrimeError when lambda lacks
 * one of the operator's primes. */
double global_eigenvalue(GlobalHeckeOperator const & op, std::map<PrimeLabel, double> const & lambda);
Rational global_eigenvalue(GlobalHeckeOperator const & op, std::map<PrimeLabel, Rational> const & lambda);

}  // namespace hmf

#endif  // HMF_GLOBAL_HECKE_HPP
