#ifndef HMF_TAU_HPP
#define HMF_TAU_HPP

#include "hmf/dataset.hpp"
#include "hmf/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hmf {

/* tau(0..N) with tau(0) = 0: coefficients of q prod_{n>=1} (1 - q^n)^24.
 * Computed from the sparse pentagonal series of prod (1 - q^n) with the
 * power recurrence n g_n = sum_k ((a+1)k - n) f_k g_{n-k}, a = 24.
 * Throws BudgetExceededError above max_n. */
std::vector<BigInt> ramanujan_tau(std::int64_t N, std::int64_t max_n = 1'000'000);

/* Checks tau(p^{k+1}) = tau(p) tau(p^k) - p^11 tau(p^{k-1}) for every prime
 * power and tau(p^e m) = tau(p^e) tau(m) for every n = p^e m <= N (p the
 * least prime factor).  Throws IdentityFailure on the first mismatch;
 * returns the number of identities checked. */
std::int64_t verify_tau_identities(std::vector<BigInt> const & tau);

struct TauPrime {
    std::int64_t p;
    BigInt tau_p;
    /* |tau(p)| / p^5 */
    Rational lambda;
    /* tau(p^2) / p^10, the T(p^2) eigenvalue; absent when p^2 > N */
    bool has_tp2 = false;
    Rational tp2;
};

std::vector<TauPrime> tau_primes(std::vector<BigInt> const & tau);

/* One record for Delta: lambda_inf = b/2(1 - b/2) = -30 at weight b = 12,
 * xi = 0, Hecke values at every prime p <= N with label "p:0". */
Dataset tau_dataset(std::vector<TauPrime> const & primes);

/* p,tau_p,lambda_p,tp2 rows; tp2 empty when unavailable. */
void write_tau_table(std::ostream & out, std::vector<TauPrime> const & primes);

}  // namespace hmf

#endif  // HMF_TAU_HPP
