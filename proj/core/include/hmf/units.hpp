#ifndef HMF_UNITS_HPP
#define HMF_UNITS_HPP

#include "hmf/field.hpp"

#include <optional>
#include <vector>

namespace hmf {

struct UnitGroupData {
    /* Fundamental unit eps0 > 1 in the first embedding; absent for Q. */
    std::optional<FieldElement> fundamental;
    Rational fundamental_norm = 1;
    /* Signs of eps0 under each embedding. */
    std::vector<int> signs;
    double log_regulator = 0.0;
};

/* Fundamental unit of O_F from the continued fraction of omega. */
UnitGroupData unit_group(NumberField const & F);

/* Unit eps with eps^2 = r / r' (first embedding of eps positive), when one
 * exists. */
std::optional<FieldElement> unit_square_class(NumberField const & F, FieldElement const & r,
                                              FieldElement const & rp);

bool is_unit(NumberField const & F, FieldElement const & x);

}  // namespace hmf

#endif  // HMF_UNITS_HPP
