#ifndef HMF_RESIDUE_RING_HPP
#define HMF_RESIDUE_RING_HPP

#include "hmf/errors.hpp"
#include "hmf/ideal.hpp"

#include <cstdint>
#include <vector>

namespace hmf {

/* Raised when inverting a non-unit of O/c; carries the ideal (x) + c. */
class NonUnitError : public DomainError {
  public:
    NonUnitError(std::string const & what, Ideal witness)
        : DomainError("non_unit", what), witness_(std::move(witness)) {}
    Ideal const & witness() const { return witness_; }

  private:
    Ideal witness_;
};

/* O_F / c with canonical representatives 0 <= x_i < hnf[i][i].  Elements
 * are addressed either by coordinates or by a dense index in [0, N(c)). */
class ResidueRing {
  public:
    ResidueRing(NumberField F, Ideal modulus);

    NumberField const & field() const { return F_; }
    Ideal const & modulus() const { return c_; }
    std::int64_t size() const { return c_.norm(); }

    std::vector<IntVec> enumerate() const;
    IntVec reduce(IntVec x) const { return c_.reduce(x); }
    IntVec reduce(FieldElement const & x) const;
    IntVec mul(IntVec a, IntVec b) const;
    IntVec add(IntVec a, IntVec b) const;

    std::int64_t index_of(IntVec x) const;
    IntVec element(std::int64_t index) const;

    bool is_unit(IntVec x) const;
    IntVec invert(IntVec x) const;
    /* Order of (O/c)^*, the multiplicative Euler function of c. */
    std::int64_t unit_count() const { return phi_; }
    /* Units in index order, paired with their inverses. */
    std::vector<std::pair<IntVec, IntVec>> unit_pairs() const;

    std::vector<IdealFactor> const & prime_factors() const { return factors_; }

  private:
    IntVec pow(IntVec x, std::int64_t e) const;

    NumberField F_;
    Ideal c_;
    std::vector<IdealFactor> factors_;
    std::int64_t phi_ = 1;
};

}  // namespace hmf

#endif  // HMF_RESIDUE_RING_HPP
