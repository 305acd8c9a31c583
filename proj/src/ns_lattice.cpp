#include "k3fm/ns_lattice.hpp"

#include <algorithm>
#include <string>

namespace k3fm {

NSLattice::NSLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
        throw InvariantViolation("gram square", "Gram matrix must be a non-empty square matrix");
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
        if (gram_(i, i) % 2 != 0)
            throw InvariantViolation("gram even",
                                     "diagonal entry " + std::to_string(i) + " is odd (" + gram_(i, i).str() + ")");
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw InvariantViolation("gram symmetric", "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                                               ") and (" + std::to_string(j) + "," +
                                                               std::to_string(i) + ") differ");
    }
}

std::shared_ptr<const NSLattice> NSLattice::make(IntMatrix gram) {
    return std::make_shared<const NSLattice>(std::move(gram));
}

Integer NSLattice::pair(std::span<const Integer> x, std::span<const Integer> y) const {
    if (x.size() != rank() || y.size() != rank()) throw LatticeMismatch("pairing: vector length differs from lattice rank");
    Integer sum = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) sum += x[i] * gram_(i, j) * y[j];
    }
    return sum;
}

Rational NSLattice::pair(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != rank() || y.size() != rank()) throw LatticeMismatch("pairing: vector length differs from lattice rank");
    Rational sum = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (gram_(i, j) == 0 || y[j] == 0) continue;
            sum += x[i] * Rational(gram_(i, j)) * y[j];
        }
    }
    return sum;
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* where) {
    if (!same_lattice(a, b)) throw LatticeMismatch(std::string(where) + ": classes live in different lattices");
}

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Integer> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
    if (!lattice_) throw LatticeMismatch("divisor class without a lattice");
    if (coords_.size() != lattice_->rank())
        throw LatticeMismatch("divisor class has " + std::to_string(coords_.size()) + " coordinates, lattice rank is " +
                              std::to_string(lattice_->rank()));
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
    const auto n = lattice->rank();
    return DivisorClass(std::move(lattice), std::vector<Integer>(n));
}

DivisorClass DivisorClass::basis(LatticePtr lattice, std::size_t i) {
    std::vector<Integer> c(lattice->rank());
    c.at(i) = 1;
    return DivisorClass(std::move(lattice), std::move(c));
}

bool DivisorClass::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& v) { return v == 0; });
}

std::vector<Rational> DivisorClass::rational_coords() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& v : coords_) out.emplace_back(v);
    return out;
}

DivisorClass DivisorClass::operator-() const {
    auto c = coords_;
    for (auto& v : c) v = -v;
    return DivisorClass(lattice_, std::move(c));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require_same_lattice(lattice_, other.lattice_, "class sum");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass out = a;
    out += b;
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(const Integer& k, const DivisorClass& a) {
    auto c = a.coords_;
    for (auto& v : c) v *= k;
    return DivisorClass(a.lattice_, std::move(c));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return same_lattice(a.lattice_, b.lattice_) && a.coords_ == b.coords_;
}

bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.coords_ < b.coords_; }

Integer intersect(const DivisorClass& x, const DivisorClass& y) {
    require_same_lattice(x.lattice(), y.lattice(), "intersect");
    return x.lattice()->pair(x.coords(), y.coords());
}

Integer degree(const DivisorClass& x, const DivisorClass& h) { return intersect(x, h); }

Integer chi_line(const DivisorClass& x) {
    // x^2 is even on an even lattice, so the division is exact.
    return 2 + intersect(x, x) / 2;
}

}  // namespace k3fm
