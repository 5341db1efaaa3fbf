#ifndef HMF_KLOOSTERMAN_HPP
#define HMF_KLOOSTERMAN_HPP

#include "hmf/character.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace hmf {

/* K_chi(r, r'; c) at the cusp infinity: c in I \ {0}, r, r' in O'. */
struct KloostermanQuery {
    FieldElement c;
    FieldElement r;
    FieldElement rp;
};

/* Throws InvalidArgument unless c is a nonzero element of the character's
 * modulus I and r, r' lie in the inverse different. */
void validate_query(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q);

/* sum over a d = 1 mod c of conj(chi(d)) e(S((r' a + r d)/c)).  Phases are
 * reduced exactly before the exponential is taken. */
std::complex<double> kloosterman(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q);

struct SymmetryReport {
    std::complex<double> value;
    /* |conj K(r,r';c) - K(r',r;-c)| and |K(r',r;-c) - chi(-1) K(r',r;c)| */
    double conjugate_deviation = 0.0;
    double sign_deviation = 0.0;

    double max_deviation() const { return std::max(conjugate_deviation, sign_deviation); }
    bool ok(double tol = 1e-9) const { return max_deviation() <= tol; }
};

SymmetryReport symmetry_check(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q);

/* Integral ideals contained in I with norm at most max_norm, sorted by
 * norm and then HNF. */
std::vector<Ideal> ideals_up_to(NumberField const & F, Ideal const & I, std::int64_t max_norm);

struct WeilRow {
    FieldElement c;
    std::int64_t norm = 0;
    double abs_value = 0.0;
    /* prod_{p in S} Np^v * (prod_{p not in S} Np^v)^{1/2 + eps} */
    double bound = 0.0;
    double ratio = 0.0;
    /* |K| / (number of ideal divisors of c * sqrt N(c)); 2 sqrt p for prime c */
    double weil_ratio = 0.0;
    bool prime_modulus = false;
};

struct WeilScanOptions {
    std::int64_t max_norm = 500;
    double eps = 0.1;
    /* exceptional primes; the primes dividing I when absent */
    std::optional<std::vector<PrimeLabel>> exceptional;
    unsigned threads = 1;
    /* guard on the total number of summands over the scan */
    std::int64_t max_terms = 200'000'000;
};

struct WeilScanResult {
    std::vector<WeilRow> rows;
    double max_ratio = 0.0;
    /* principal ideals skipped because no generator was found */
    std::vector<Ideal> skipped;
};

/* K(r, r'; c) for one generator c of each principal ideal (c) in I with
 * N(c) <= max_norm, rows ordered by norm. */
WeilScanResult weil_scan(NumberField const & F, DirichletCharacter const & chi, FieldElement const & r,
                         FieldElement const & rp, WeilScanOptions const & options);

/* delta_infinity(r, r') for Gamma_0(I) with translation part beta = 0:
 * (1/2) sum over units eps with eps^2 = r/r' of chi(1/eps) prod_j sign(eps_j)^{xi_j}.
 * Requires chi(-1) = prod_j (-1)^{xi_j}. */
std::complex<double> delta_term(NumberField const & F, DirichletCharacter const & chi, FieldElement const & r,
                                FieldElement const & rp, std::vector<int> const & xi);

}  // namespace hmf

#endif  // HMF_KLOOSTERMAN_HPP
