#pragma once

// Picard rank one: for NS(X) = <l> with l^2 = 4(2n+1), the induced map of a
// rank-2 locally free kernel in scalar coordinates (r, coefficient of l, ch2)
// is pinned down by a small integer constraint system.
//
// Unknowns: the image (z, c, alpha) of ch(O) under Phi^2, the c1 coefficient
// x of l, and the ch2 coefficient y. With z = 2n+3 and l^2 = 4(z-2):
//   image of (2, 1, z-4) is (0, 0, 1)                      (E_s -> O_s)
//   2 z alpha - 4 c^2 (z-2) + 2 z^2 = 2                     (chi(O,O) = 2)
//   2 alpha + 4 c (z-2) + z (z-4) + 4 z = 1                 (rank of Phi^-1 Phi O)
// The matrix is
//   [ z      -l^2      2   ]
//   [ c       x       -1   ]
//   [ alpha   y l^2   z-4  ].

#include "k3fm/exact.hpp"
#include "k3fm/fm_transform.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace k3fm::pic1 {

struct Solution {
    Integer n, lsq, z, c, x, alpha, y;
    IntMatrix matrix{3, 3};
    Integer det;

    bool operator==(const Solution&) const = default;
};

/// n with lsq = 4(2n+1), or nothing when lsq is not 4 mod 8.
/// Throws InputError("lsq") for non-positive or odd lsq.
std::optional<Integer> existence_test(const Integer& lsq);

/// Fills z, lsq, x, alpha, y, matrix and det from (n, c).
Solution make_solution(const Integer& n, const Integer& c);

/// Both solutions of the system: c = -n-1 (det +1) first, then c = -n-2 (det -1).
std::pair<Solution, Solution> solve_constraints(const Integer& n);

struct Selection {
    Solution selected;
    Solution excluded;
    /// Slope of the transform of O, as a multiple of l^2, for the excluded
    /// solution: (n+2)/(2n+3). It exceeds the 1/2 of the stable E_s.
    Rational excluded_slope_ratio;
    bool obstruction_holds;  ///< excluded_slope_ratio > 1/2
};

Selection select_physical(const std::pair<Solution, Solution>& pair);

struct OracleResult {
    std::vector<Solution> solutions;  ///< sorted by c
    Integer bound;
    bool conclusive;                  ///< bound >= 4n + 8
};

/// Exhaustive scan of |c|, |x|, |y| <= bound. alpha is determined by the
/// last row of the image condition and is not boxed: the closed-form alpha
/// grows like 2n^2 and would fall outside any linear box. `oo_constant`
/// replaces the 2 on the right of the chi(O,O) equation (for perturbation
/// tests).
OracleResult brute_force_oracle(const Integer& n, const Integer& bound, const Integer& oo_constant = 2);

/// Residuals of the three invariants a solution must satisfy; all zero for a
/// genuine solution.
struct Residuals {
    Integer oo;          ///< 2 z alpha - 4 c^2 (z-2) + 2 z^2 - 2
    Integer rank;        ///< 2 alpha + 4 c (z-2) + z (z-4) + 4 z - 1
    Integer z_plus_2c;   ///< (z + 2c)^2 - 1
    std::vector<Integer> image;  ///< matrix * (2, 1, z-4) - (0, 0, 1)
    bool all_zero() const;
};
Residuals residuals(const Solution& s);

/// The rank-1 lattice [[lsq]].
LatticePtr lattice_for(const Integer& lsq);

/// The matrix as a transform of the rank-1 lattice onto a copy of itself.
CohTransform to_transform(const Solution& s);

}  // namespace k3fm::pic1
