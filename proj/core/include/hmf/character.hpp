#ifndef HMF_CHARACTER_HPP
#define HMF_CHARACTER_HPP

#include "hmf/residue_ring.hpp"

#include <complex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace hmf {

/* exp(2 pi i * phase) with phase an exact rational in [0, 1). */
struct RootOfUnity {
    Rational phase = 0;

    static RootOfUnity from_order(std::int64_t order, std::int64_t exponent);
    std::complex<double> value() const;
    friend RootOfUnity operator*(RootOfUnity const & a, RootOfUnity const & b);
    RootOfUnity inverse() const;
    friend bool operator==(RootOfUnity const & a, RootOfUnity const & b) { return a.phase == b.phase; }
};

/* Character of (O/I)^*, stored as a table of exact phases indexed by the
 * residue ring's dense index.  Non-units have no value. */
class DirichletCharacter {
  public:
    static DirichletCharacter trivial(NumberField const & F, Ideal const & modulus);
    /* Extends prescribed values on generators multiplicatively.  Throws
     * InvalidArgument when the generators miss part of (O/I)^* or the
     * prescription is not multiplicative. */
    static DirichletCharacter from_generators(NumberField const & F, Ideal const & modulus,
                                              std::vector<std::pair<FieldElement, RootOfUnity>> const & values);
    /* JSON list of {"unit": "<element>", "order": n, "exponent": k} (or
     * [element, n, k] triples); the listed units are treated as generators. */
    static DirichletCharacter from_json(NumberField const & F, Ideal const & modulus, std::string_view text);

    Ideal const & modulus() const { return ring_.modulus(); }
    ResidueRing const & ring() const { return ring_; }
    bool is_trivial() const;

    std::optional<RootOfUnity> at(IntVec x) const;
    std::optional<RootOfUnity> at(FieldElement const & x) const;
    /* chi(x) as a complex number, 0 on non-units. */
    std::complex<double> operator()(FieldElement const & x) const;
    /* chi(-1), which is +1 or -1. */
    int sign_at_minus_one() const;

  private:
    explicit DirichletCharacter(ResidueRing ring);

    ResidueRing ring_;
    std::vector<char> defined_;
    std::vector<Rational> phase_;
};

}  // namespace hmf

#endif  // HMF_CHARACTER_HPP
