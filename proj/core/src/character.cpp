#include "hmf/character.hpp"

#include "hmf/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>

namespace hmf {

RootOfUnity RootOfUnity::from_order(std::int64_t order, std::int64_t exponent)
{
    if (order < 1) throw InvalidArgument("root of unity order must be positive");
    Rational q(static_cast<long>(floor_mod(exponent, order)), static_cast<long>(order));
    q.canonicalize();
    return {q};
}

std::complex<double> RootOfUnity::value() const
{
    if (phase == 0) return {1.0, 0.0};
    double th = 2.0 * std::numbers::pi * phase.get_d();
    return {std::cos(th), std::sin(th)};
}

RootOfUnity operator*(RootOfUnity const & a, RootOfUnity const & b) { return {frac(a.phase + b.phase)}; }

RootOfUnity RootOfUnity::inverse() const { return {frac(-phase)}; }

DirichletCharacter::DirichletCharacter(ResidueRing ring)
    : ring_(std::move(ring)), defined_(static_cast<std::size_t>(ring_.size()), 0),
      phase_(static_cast<std::size_t>(ring_.size()))
{
}

DirichletCharacter DirichletCharacter::trivial(NumberField const & F, Ideal const & modulus)
{
    DirichletCharacter chi{ResidueRing(F, modulus)};
    for (std::int64_t i = 0; i < chi.ring_.size(); ++i)
        if (chi.ring_.is_unit(chi.ring_.element(i))) chi.defined_[i] = 1;
    return chi;
}

DirichletCharacter DirichletCharacter::from_generators(NumberField const & F, Ideal const & modulus,
                                                       std::vector<std::pair<FieldElement, RootOfUnity>> const & values)
{
    DirichletCharacter chi{ResidueRing(F, modulus)};
    ResidueRing const & R = chi.ring_;
    std::vector<std::pair<IntVec, Rational>> gens;
    for (auto const & [x, z] : values) {
        if (!x.is_integral()) throw InvalidArgument("character generator must be integral");
        IntVec g = R.reduce(x);
        if (!R.is_unit(g)) throw InvalidArgument("character generator " + F.format(x) + " is not a unit");
        gens.emplace_back(g, z.phase);
    }
    // breadth-first closure of {1} under multiplication by the generators
    std::vector<std::int64_t> queue;
    std::int64_t one = R.index_of(IntVec{1, 0});
    chi.defined_[one] = 1;
    chi.phase_[one] = 0;
    queue.push_back(one);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        IntVec x = R.element(queue[head]);
        Rational px = chi.phase_[queue[head]];
        for (auto const & [g, pg] : gens) {
            std::int64_t j = R.index_of(R.mul(x, g));
            Rational pj = frac(px + pg);
            if (chi.defined_[j]) {
                if (chi.phase_[j] != pj) throw InvalidArgument("character values are not multiplicative");
            } else {
                chi.defined_[j] = 1;
                chi.phase_[j] = pj;
                queue.push_back(j);
            }
        }
    }
    if (static_cast<std::int64_t>(queue.size()) != R.unit_count())
        throw InvalidArgument("character generators do not generate the unit group modulo " + modulus.to_string());
    return chi;
}

DirichletCharacter DirichletCharacter::from_json(NumberField const & F, Ideal const & modulus, std::string_view text)
{
    std::vector<std::pair<FieldElement, RootOfUnity>> values;
    try {
        auto j = nlohmann::json::parse(text);
        if (!j.is_array()) throw InvalidArgument("character file must hold a JSON list");
        for (auto const & item : j) {
            std::string unit;
            std::int64_t order = 0, exponent = 0;
            if (item.is_array()) {
                unit = item.at(0).is_string() ? item.at(0).get<std::string>() : item.at(0).dump();
                order = item.at(1).get<std::int64_t>();
                exponent = item.at(2).get<std::int64_t>();
            } else {
                auto const & u = item.at("unit");
                unit = u.is_string() ? u.get<std::string>() : u.dump();
                order = item.at("order").get<std::int64_t>();
                exponent = item.at("exponent").get<std::int64_t>();
            }
            values.emplace_back(F.parse_element(unit), RootOfUnity::from_order(order, exponent));
        }
    } catch (nlohmann::json::exception const & ex) {
        throw InvalidArgument(std::string("bad character file: ") + ex.what());
    }
    if (values.empty()) return trivial(F, modulus);
    return from_generators(F, modulus, values);
}

bool DirichletCharacter::is_trivial() const
{
    for (std::size_t i = 0; i < phase_.size(); ++i)
        if (defined_[i] && phase_[i] != 0) return false;
    return true;
}

std::optional<RootOfUnity> DirichletCharacter::at(IntVec x) const
{
    std::int64_t i = ring_.index_of(x);
    if (!defined_[i]) return std::nullopt;
    return RootOfUnity{phase_[i]};
}

std::optional<RootOfUnity> DirichletCharacter::at(FieldElement const & x) const
{
    if (!x.is_integral()) throw InvalidArgument("character argument must be integral");
    return at(to_intvec(x));
}

std::complex<double> DirichletCharacter::operator()(FieldElement const & x) const
{
    auto z = at(x);
    return z ? z->value() : std::complex<double>(0.0, 0.0);
}

int DirichletCharacter::sign_at_minus_one() const
{
    auto z = at(IntVec{-1, 0});
    if (!z) return 1;  // only when O/I is the zero ring, where -1 = 1
    if (z->phase == 0) return 1;
    if (z->phase == Rational(1, 2)) return -1;
    throw IdentityFailure("chi(-1) is not a sign");
}

}  // namespace hmf
