#include "hmf/field.hpp"

#include "hmf/errors.hpp"

#include <cmath>
#include <regex>

namespace hmf {

bool FieldElement::is_zero() const
{
    for (auto const & c : coords)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_integral() const
{
    for (auto const & c : coords)
        if (c.get_den() != 1) return false;
    return true;
}

bool operator==(FieldElement const & a, FieldElement const & b) { return a.coords == b.coords; }

FieldElement operator+(FieldElement const & a, FieldElement const & b)
{
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

FieldElement operator-(FieldElement const & a, FieldElement const & b)
{
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

FieldElement operator-(FieldElement const & a)
{
    FieldElement r = a;
    for (auto & c : r.coords) c = -c;
    return r;
}

FieldElement operator*(Rational const & s, FieldElement const & a)
{
    FieldElement r = a;
    for (auto & c : r.coords) c *= s;
    return r;
}

NumberField NumberField::rational() { return NumberField(1, 1, 1, 0, 0); }

NumberField NumberField::real_quadratic(std::int64_t m)
{
    if (m <= 1) throw InvalidArgument("real quadratic radicand must exceed 1, got " + std::to_string(m));
    if (!is_squarefree(m)) throw NotSquarefreeError(std::to_string(m) + " is not squarefree");
    if (m % 4 == 1) return NumberField(2, m, m, 1, (m - 1) / 4);
    return NumberField(2, m, 4 * m, 0, m);
}

NumberField NumberField::parse(std::string_view spec)
{
    std::string s;
    for (char ch : spec)
        if (ch != ' ') s.push_back(ch);
    if (s == "Q" || s == "rational" || s == "QQ") return rational();
    static const std::regex re(R"(Q\(sqrt\(?(-?[0-9]+)\)?\))");
    std::smatch mt;
    if (std::regex_match(s, mt, re)) return real_quadratic(std::stoll(mt[1].str()));
    throw InvalidArgument("unrecognised field spec '" + std::string(spec) + "'");
}

std::vector<std::int64_t> NumberField::defining_polynomial() const
{
    if (degree_ == 1) return {0, 1};
    return {-n_, -t_, 1};
}

std::string NumberField::spec() const
{
    if (degree_ == 1) return "Q";
    return "Q(sqrt " + std::to_string(m_) + ")";
}

void NumberField::check(FieldElement const & x) const
{
    if (static_cast<int>(x.degree()) != degree_)
        throw InvalidArgument("element of degree " + std::to_string(x.degree()) + " used in " + spec());
}

FieldElement NumberField::zero() const { return FieldElement(std::vector<Rational>(degree_, 0)); }
FieldElement NumberField::one() const { return from_integer(1); }

FieldElement NumberField::omega() const
{
    if (degree_ == 1) return one();
    return make(0, 1);
}

FieldElement NumberField::from_integer(std::int64_t a) const { return from_rational(Rational(static_cast<long>(a))); }

FieldElement NumberField::from_rational(Rational const & q) const
{
    FieldElement r = zero();
    r[0] = q;
    return r;
}

FieldElement NumberField::make(Rational const & c0, Rational const & c1) const
{
    if (degree_ == 1) {
        if (c1 != 0) throw InvalidArgument("omega coordinate given for Q");
        return from_rational(c0);
    }
    return FieldElement({c0, c1});
}

FieldElement NumberField::parse_element(std::string_view text) const
{
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw InvalidArgument("empty field element");
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        if (degree_ != 2) throw InvalidArgument("coordinate pair given for Q");
        return make(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    }
    auto w = s.find('w');
    if (w == std::string::npos) return from_rational(parse_rational(s));
    if (degree_ != 2) throw InvalidArgument("omega used in Q");
    if (w != s.size() - 1) throw InvalidArgument("omega term must come last in '" + s + "'");
    std::size_t split = 0;
    for (std::size_t i = w; i-- > 1;)
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    std::string head = s.substr(0, split);
    std::string term = s.substr(split, w - split);
    if (!term.empty() && term.back() == '*') term.pop_back();
    Rational c1;
    if (term.empty() || term == "+") c1 = 1;
    else if (term == "-") c1 = -1;
    else c1 = parse_rational(term);
    Rational c0 = head.empty() ? Rational(0) : parse_rational(head);
    return make(c0, c1);
}

std::string NumberField::format(FieldElement const & x) const
{
    check(x);
    if (degree_ == 1) return x[0].get_str();
    return x[0].get_str() + "," + x[1].get_str();
}

FieldElement NumberField::mul(FieldElement const & a, FieldElement const & b) const
{
    check(a);
    check(b);
    if (degree_ == 1) return from_rational(a[0] * b[0]);
    // (a0 + a1 w)(b0 + b1 w), with w^2 = t w + n
    Rational c0 = a[0] * b[0] + n_ * (a[1] * b[1]);
    Rational c1 = a[0] * b[1] + a[1] * b[0] + t_ * (a[1] * b[1]);
    return FieldElement({c0, c1});
}

FieldElement NumberField::conjugate(FieldElement const & a) const
{
    check(a);
    if (degree_ == 1) return a;
    return FieldElement({a[0] + t_ * a[1], -a[1]});
}

Rational NumberField::trace(FieldElement const & x) const
{
    check(x);
    if (degree_ == 1) return x[0];
    return 2 * x[0] + t_ * x[1];
}

Rational NumberField::norm(FieldElement const & x) const
{
    check(x);
    if (degree_ == 1) return x[0];
    return x[0] * x[0] + t_ * (x[0] * x[1]) - n_ * (x[1] * x[1]);
}

FieldElement NumberField::inverse(FieldElement const & a) const
{
    Rational nm = norm(a);
    if (nm == 0) throw InvalidArgument("inverse of zero");
    Rational inv = 1 / nm;
    if (degree_ == 1) return from_rational(inv);
    return inv * conjugate(a);
}

FieldElement NumberField::div(FieldElement const & a, FieldElement const & b) const { return mul(a, inverse(b)); }

FieldElement NumberField::pow(FieldElement const & a, std::int64_t k) const
{
    FieldElement base = k < 0 ? inverse(a) : a;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

std::vector<double> NumberField::omega_images() const
{
    if (degree_ == 1) return {1.0};
    long double root = std::sqrt(static_cast<long double>(t_ * t_ + 4 * n_));
    return {static_cast<double>((t_ + root) / 2), static_cast<double>((t_ - root) / 2)};
}

std::vector<double> NumberField::embed(FieldElement const & x) const
{
    check(x);
    if (degree_ == 1) return {x[0].get_d()};
    long double root = std::sqrt(static_cast<long double>(t_ * t_ + 4 * n_));
    long double w[2] = {(t_ + root) / 2, (t_ - root) / 2};
    // exact rational coordinates first, then one rounding step per image
    long double x0 = static_cast<long double>(x[0].get_d());
    long double x1 = static_cast<long double>(x[1].get_d());
    if (x[0].get_den() == 1 && mpz_fits_slong_p(x[0].get_num_mpz_t()))
        x0 = static_cast<long double>(x[0].get_num().get_si());
    if (x[1].get_den() == 1 && mpz_fits_slong_p(x[1].get_num_mpz_t()))
        x1 = static_cast<long double>(x[1].get_num().get_si());
    return {static_cast<double>(x0 + x1 * w[0]), static_cast<double>(x0 + x1 * w[1])};
}

FieldElement NumberField::different_generator() const
{
    if (degree_ == 1) return one();
    // f(x) = x^2 - t x - n, f'(w) = 2w - t
    return make(-t_, 2);
}

}  // namespace hmf
