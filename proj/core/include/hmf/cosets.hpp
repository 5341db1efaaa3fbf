#ifndef HMF_COSETS_HPP
#define HMF_COSETS_HPP

#include "hmf/hecke.hpp"
#include "hmf/ideal.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hmf {

/* 2x2 matrix over F, row major. */
struct Mat2 {
    std::array<FieldElement, 4> e;
    FieldElement const & operator()(int i, int j) const { return e[2 * i + j]; }
};

Mat2 mat_mul(NumberField const & F, Mat2 const & a, Mat2 const & b);
FieldElement mat_det(NumberField const & F, Mat2 const & a);

/* Upper triangular representatives
 *   [[pi^{k-l}, b pi^{-k}], [0, pi^{l-k}]],  0 <= l <= 2k,  b in O/p^l,
 * of SL_2(O_p) \ Delta(p^{2k}); there are sum_{l=0}^{2k} N(p)^l of them.
 * Requires a generator of p. */
std::vector<Mat2> coset_representatives(NumberField const & F, PrimeIdeal const & pr, int k);

/* Left equivalence under SL_2(Z_p) of two determinant-one matrices over Q
 * with p-power denominators: g1 g2^{-1} has p-integral entries. */
bool left_equivalent_over_Q(Mat2 const & g1, Mat2 const & g2, std::int64_t p);

struct ConvolutionResult {
    LocalHeckeElement product;
    std::uint64_t pair_count = 0;
    /* multiplicity of each right coset, grouped by level n = 0 .. k+m */
    std::vector<std::uint64_t> level_multiplicity;
};

/* T(p^{2k}) * T(p^{2m}) over Q by multiplying every pair of coset
 * representatives and tallying right cosets.  Throws IdentityFailure if
 * the multiplicity is not constant on a double coset and
 * BudgetExceededError when the pair count exceeds max_pairs. */
ConvolutionResult brute_force_convolution(std::int64_t p, int k, int m, unsigned threads = 1,
                                          std::uint64_t max_pairs = 1'000'000);

}  // namespace hmf

#endif  // HMF_COSETS_HPP
