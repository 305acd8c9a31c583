#include "k3fm/mukai.hpp"

#include <string>

namespace k3fm {

namespace {

void require_half_integral(const Rational& t) {
    const auto den = boost::multiprecision::denominator(t);
    if (den != 1 && den != 2)
        throw InvariantViolation("ch2 denominator divides 2", "t = " + to_fraction_string(t));
}

void require_nonnegative_length(long long n) {
    if (n < 0) throw InvariantViolation("length n >= 0", "negative length " + std::to_string(n));
}

}  // namespace

ChVector ChVector::zero(LatticePtr lattice) {
    const auto n = lattice->rank();
    return ChVector{std::move(lattice), 0, std::vector<Rational>(n), 0};
}

std::vector<Rational> ChVector::flatten() const {
    std::vector<Rational> out;
    out.reserve(f.size() + 2);
    out.push_back(r);
    out.insert(out.end(), f.begin(), f.end());
    out.push_back(t);
    return out;
}

ChVector ChVector::unflatten(LatticePtr lattice, const std::vector<Rational>& v) {
    if (v.size() != lattice->rank() + 2) throw LatticeMismatch("triple has the wrong length for its lattice");
    return ChVector{std::move(lattice), v.front(), std::vector<Rational>(v.begin() + 1, v.end() - 1), v.back()};
}

bool ChVector::operator==(const ChVector& other) const {
    return same_lattice(lattice, other.lattice) && r == other.r && f == other.f && t == other.t;
}

ChVector ChVector::operator-() const { return Rational(-1) * *this; }

ChVector operator+(const ChVector& a, const ChVector& b) {
    require_same_lattice(a.lattice, b.lattice, "triple sum");
    ChVector out = a;
    out.r += b.r;
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] += b.f[i];
    out.t += b.t;
    return out;
}

ChVector operator-(const ChVector& a, const ChVector& b) { return a + (-b); }

ChVector operator*(const Rational& k, const ChVector& a) {
    ChVector out = a;
    out.r *= k;
    for (auto& v : out.f) v *= k;
    out.t *= k;
    return out;
}

ChernCharacter::ChernCharacter(Integer r, DivisorClass f, Rational t)
    : r_(std::move(r)), f_(std::move(f)), t_(std::move(t)) {
    require_half_integral(t_);
}

ChernCharacter ChernCharacter::sheaf(Integer r, DivisorClass f, Rational t) {
    if (!is_integral(t)) throw InvariantViolation("sheaf ch2 integral", "t = " + to_fraction_string(t));
    return ChernCharacter(std::move(r), std::move(f), std::move(t));
}

ChernCharacter ChernCharacter::from_vector(const ChVector& v) {
    std::vector<Integer> coords;
    coords.reserve(v.f.size());
    for (const auto& q : v.f) coords.push_back(to_integer(q, "c1 coordinate"));
    return ChernCharacter(to_integer(v.r, "rank"), DivisorClass(v.lattice, std::move(coords)), v.t);
}

ChVector ChernCharacter::to_vector() const {
    return ChVector{lattice(), Rational(r_), f_.rational_coords(), t_};
}

ChernCharacter ChernCharacter::operator-() const { return ChernCharacter(-r_, -f_, -t_); }

MukaiVector::MukaiVector(Integer r, DivisorClass f, Rational s)
    : r_(std::move(r)), f_(std::move(f)), s_(std::move(s)) {
    require_half_integral(s_);
}

MukaiVector MukaiVector::operator-() const { return MukaiVector(-r_, -f_, -s_); }

MukaiVector ch_to_mukai(const ChernCharacter& c) { return MukaiVector(c.r(), c.f(), c.t() + Rational(c.r())); }

ChernCharacter mukai_to_ch(const MukaiVector& v) { return ChernCharacter(v.r(), v.f(), v.s() - Rational(v.r())); }

Rational mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    return Rational(intersect(v.f(), w.f())) - Rational(v.r()) * w.s() - Rational(w.r()) * v.s();
}

Rational euler_chi(const ChernCharacter& a, const ChernCharacter& b) {
    return -mukai_pairing(ch_to_mukai(a), ch_to_mukai(b));
}

Rational euler_chi(const ChVector& a, const ChVector& b) {
    require_same_lattice(a.lattice, b.lattice, "euler_chi");
    const Rational sa = a.t + a.r;
    const Rational sb = b.t + b.r;
    return -(a.lattice->pair(a.f, b.f) - a.r * sb - b.r * sa);
}

namespace standard_ch {

ChernCharacter line_bundle(const DivisorClass& l) {
    return ChernCharacter::sheaf(1, l, Rational(intersect(l, l) / 2));
}

ChernCharacter twisted_ideal(const DivisorClass& l, long long n) {
    require_nonnegative_length(n);
    return ChernCharacter::sheaf(1, l, Rational(intersect(l, l) / 2 - n));
}

ChernCharacter point(const LatticePtr& lattice) { return ChernCharacter::sheaf(0, DivisorClass::zero(lattice), 1); }

ChernCharacter ideal(const LatticePtr& lattice, long long n) {
    require_nonnegative_length(n);
    return ChernCharacter::sheaf(1, DivisorClass::zero(lattice), Rational(-n));
}

ChernCharacter extension(const DivisorClass& m, const DivisorClass& l, long long n) {
    require_nonnegative_length(n);
    return ChernCharacter::sheaf(2, m + l, Rational(intersect(m, m) / 2 + intersect(l, l) / 2 - n));
}

}  // namespace standard_ch

}  // namespace k3fm
