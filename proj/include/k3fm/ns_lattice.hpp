#pragma once

// Neron-Severi lattice of a projective K3 surface: an even symmetric integer
// form, divisor classes as coordinate vectors, and line-bundle Riemann-Roch.

#include "k3fm/exact.hpp"

#include <memory>
#include <span>
#include <vector>

namespace k3fm {

class NSLattice {
public:
    /// Throws InvariantViolation unless gram is square, symmetric, and has an
    /// even diagonal.
    explicit NSLattice(IntMatrix gram);

    static std::shared_ptr<const NSLattice> make(IntMatrix gram);

    std::size_t rank() const noexcept { return gram_.rows(); }
    const IntMatrix& gram() const noexcept { return gram_; }

    Integer pair(std::span<const Integer> x, std::span<const Integer> y) const;
    Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;

    bool operator==(const NSLattice& other) const { return gram_ == other.gram_; }

private:
    IntMatrix gram_;
};

using LatticePtr = std::shared_ptr<const NSLattice>;

/// Lattices are identified by their Gram matrices.
bool same_lattice(const LatticePtr& a, const LatticePtr& b);
void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* where);

class DivisorClass {
public:
    DivisorClass(LatticePtr lattice, std::vector<Integer> coords);

    static DivisorClass zero(LatticePtr lattice);
    /// The i-th basis vector.
    static DivisorClass basis(LatticePtr lattice, std::size_t i);

    const LatticePtr& lattice() const noexcept { return lattice_; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }
    std::size_t rank() const noexcept { return coords_.size(); }
    bool is_zero() const;

    std::vector<Rational> rational_coords() const;

    DivisorClass operator-() const;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Integer& k, const DivisorClass& a);
    DivisorClass& operator+=(const DivisorClass& other);

    /// Equal coordinates over the same lattice.
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    /// Lexicographic on coordinates; used for deterministic listings.
    friend bool operator<(const DivisorClass& a, const DivisorClass& b);

private:
    LatticePtr lattice_;
    std::vector<Integer> coords_;
};

/// x^T * gram * y.
Integer intersect(const DivisorClass& x, const DivisorClass& y);
/// Degree against a polarization h; this is the slope of the line bundle O(x).
Integer degree(const DivisorClass& x, const DivisorClass& h);
/// chi(O(x)) = 2 + x^2/2.
Integer chi_line(const DivisorClass& x);

}  // namespace k3fm
