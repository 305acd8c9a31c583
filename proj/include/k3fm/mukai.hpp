#pragma once

// Chern characters and Mukai vectors of objects on a K3 surface.
//
// Conventions: v(E) = (r, c1, ch2 + r) and the Mukai pairing is
//   <v, w> = f_v . f_w - r_v s_w - r_w s_v,
// so that chi(E, F) = -<v(E), v(F)>. With these, chi(O, O) = 2 and the
// rank-2 bundle with ch = (2, l, -5) has v = (2, l, -3).

#include "k3fm/ns_lattice.hpp"

#include <vector>

namespace k3fm {

/// A rational (r, f, t) triple over a lattice; the vector space in which
/// cohomological transforms act.
struct ChVector {
    LatticePtr lattice;
    Rational r;
    std::vector<Rational> f;
    Rational t;

    static ChVector zero(LatticePtr lattice);
    /// Coordinates in the basis {rank, NS basis, ch2}.
    std::vector<Rational> flatten() const;
    static ChVector unflatten(LatticePtr lattice, const std::vector<Rational>& v);

    bool operator==(const ChVector& other) const;
    ChVector operator-() const;
};

ChVector operator+(const ChVector& a, const ChVector& b);
ChVector operator-(const ChVector& a, const ChVector& b);
ChVector operator*(const Rational& k, const ChVector& a);

class ChernCharacter {
public:
    /// t must have denominator dividing 2.
    ChernCharacter(Integer r, DivisorClass f, Rational t);

    /// Constructor for classes of actual sheaves: t must be integral.
    static ChernCharacter sheaf(Integer r, DivisorClass f, Rational t);
    /// Throws InvariantViolation if r or f is non-integral or t has a
    /// denominator other than 1 or 2.
    static ChernCharacter from_vector(const ChVector& v);

    const Integer& r() const noexcept { return r_; }
    const DivisorClass& f() const noexcept { return f_; }
    const Rational& t() const noexcept { return t_; }
    const LatticePtr& lattice() const noexcept { return f_.lattice(); }

    ChVector to_vector() const;
    bool operator==(const ChernCharacter& other) const = default;
    ChernCharacter operator-() const;

private:
    Integer r_;
    DivisorClass f_;
    Rational t_;
};

class MukaiVector {
public:
    MukaiVector(Integer r, DivisorClass f, Rational s);

    const Integer& r() const noexcept { return r_; }
    const DivisorClass& f() const noexcept { return f_; }
    const Rational& s() const noexcept { return s_; }

    bool operator==(const MukaiVector& other) const = default;
    MukaiVector operator-() const;

private:
    Integer r_;
    DivisorClass f_;
    Rational s_;
};

MukaiVector ch_to_mukai(const ChernCharacter& c);
ChernCharacter mukai_to_ch(const MukaiVector& v);

Rational mukai_pairing(const MukaiVector& v, const MukaiVector& w);
Rational euler_chi(const ChernCharacter& a, const ChernCharacter& b);
/// The same Euler form, on arbitrary rational triples.
Rational euler_chi(const ChVector& a, const ChVector& b);

/// Chern characters of the sheaves that appear in the kernel sequences.
namespace standard_ch {

/// O(l): (1, l, l^2/2).
ChernCharacter line_bundle(const DivisorClass& l);
/// L (x) I_Z with |Z| = n: (1, l, l^2/2 - n).
ChernCharacter twisted_ideal(const DivisorClass& l, long long n);
/// O_x: (0, 0, 1).
ChernCharacter point(const LatticePtr& lattice);
/// I_W with |W| = n: (1, 0, -n).
ChernCharacter ideal(const LatticePtr& lattice, long long n);
/// Extension 0 -> M -> E -> L (x) I_Z -> 0 with |Z| = n: (2, m + l, m^2/2 + l^2/2 - n).
ChernCharacter extension(const DivisorClass& m, const DivisorClass& l, long long n);

}  // namespace standard_ch

}  // namespace k3fm
