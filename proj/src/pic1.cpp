#include "k3fm/pic1.hpp"

#include <algorithm>
#include <array>

namespace k3fm::pic1 {

std::optional<Integer> existence_test(const Integer& lsq) {
    if (lsq <= 0) throw InputError("lsq", "l^2 must be positive for an ample generator, got " + lsq.str());
    if (lsq % 2 != 0) throw InputError("lsq", "l^2 must be even on a K3 surface, got " + lsq.str());
    if (lsq % 8 != 4) return std::nullopt;
    return (lsq / 4 - 1) / 2;
}

Solution make_solution(const Integer& n, const Integer& c) {
    Solution s;
    s.n = n;
    s.c = c;
    s.z = 2 * n + 3;
    s.lsq = 4 * (2 * n + 1);
    s.x = s.z - 4 - 2 * c;
    s.alpha = 2 * c * (2 + c);
    s.y = c + 2;
    s.matrix = IntMatrix{{s.z, -s.lsq, 2}, {c, s.x, -1}, {s.alpha, s.y * s.lsq, s.z - 4}};
    s.det = to_integer(determinant(to_rational(s.matrix)), "pic1 determinant");
    return s;
}

std::pair<Solution, Solution> solve_constraints(const Integer& n) {
    if (n < 0) throw InputError("n", "n must be non-negative");
    return {make_solution(n, -n - 1), make_solution(n, -n - 2)};
}

Selection select_physical(const std::pair<Solution, Solution>& pair) {
    const bool first_is_positive = pair.first.det == 1;
    const Solution& selected = first_is_positive ? pair.first : pair.second;
    const Solution& excluded = first_is_positive ? pair.second : pair.first;
    if (selected.det != 1 || excluded.det != -1)
        throw InvariantViolation("|Phi^K|=1 and |Phi^K|=-1", "the pair does not have determinants +1 and -1");
    const Rational ratio(excluded.n + 2, 2 * excluded.n + 3);
    return {selected, excluded, ratio, ratio > Rational(1, 2)};
}

namespace {

/// The exhaustive scan, generic over the arithmetic type so small instances
/// can run on machine integers. Returns (c, x, alpha, y) tuples.
template <typename T>
std::vector<std::array<T, 4>> scan(const T& n, const T& bound, const T& oo_constant) {
    std::vector<std::array<T, 4>> hits;
    const T z = 2 * n + 3;
    const T lsq = 4 * (2 * n + 1);
    for (T c = -bound; c <= bound; ++c) {
        // middle row of the image condition: 2c + x - (z-4) = 0
        const T x = z - 4 - 2 * c;
        if (x > bound || x < -bound) continue;
        for (T y = -bound; y <= bound; ++y) {
            // last row: 2 alpha + y l^2 + (z-4)^2 = 1
            const T twice_alpha = 1 - y * lsq - (z - 4) * (z - 4);
            if (twice_alpha % 2 != 0) continue;
            const T alpha = twice_alpha / 2;
            if (2 * z * alpha - 4 * c * c * (z - 2) + 2 * z * z != oo_constant) continue;
            if (2 * alpha + 4 * c * (z - 2) + z * (z - 4) + 4 * z != 1) continue;
            hits.push_back({c, x, alpha, y});
        }
    }
    return hits;
}

}  // namespace

OracleResult brute_force_oracle(const Integer& n, const Integer& bound, const Integer& oo_constant) {
    if (n < 0) throw InputError("n", "n must be non-negative");
    if (bound < 0) throw InputError("bound", "bound must be non-negative");
    OracleResult out{{}, bound, bound >= 4 * n + 8};

    std::vector<std::array<Integer, 4>> hits;
    // Every intermediate stays below about 1e14 when n, bound <= 1e4.
    const Integer limit = 10000;
    if (n <= limit && bound <= limit && abs(oo_constant) <= limit) {
        for (const auto& h : scan<long long>(n.convert_to<long long>(), bound.convert_to<long long>(),
                                             oo_constant.convert_to<long long>()))
            hits.push_back({Integer(h[0]), Integer(h[1]), Integer(h[2]), Integer(h[3])});
    } else {
        hits = scan<Integer>(n, bound, oo_constant);
    }

    const Integer z = 2 * n + 3;
    const Integer lsq = 4 * (2 * n + 1);
    for (const auto& [c, x, alpha, y] : hits) {
        Solution s;
        s.n = n;
        s.lsq = lsq;
        s.z = z;
        s.c = c;
        s.x = x;
        s.alpha = alpha;
        s.y = y;
        s.matrix = IntMatrix{{z, -lsq, 2}, {c, x, -1}, {alpha, y * lsq, z - 4}};
        s.det = to_integer(determinant(to_rational(s.matrix)), "pic1 determinant");
        out.solutions.push_back(std::move(s));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const Solution& a, const Solution& b) { return a.c < b.c; });
    return out;
}

bool Residuals::all_zero() const {
    return oo == 0 && rank == 0 && z_plus_2c == 0 &&
           std::all_of(image.begin(), image.end(), [](const Integer& v) { return v == 0; });
}

Residuals residuals(const Solution& s) {
    Residuals r;
    r.oo = 2 * s.z * s.alpha - 4 * s.c * s.c * (s.z - 2) + 2 * s.z * s.z - 2;
    r.rank = 2 * s.alpha + 4 * s.c * (s.z - 2) + s.z * (s.z - 4) + 4 * s.z - 1;
    r.z_plus_2c = (s.z + 2 * s.c) * (s.z + 2 * s.c) - 1;
    const std::vector<Integer> es{2, 1, s.z - 4};
    const std::vector<Integer> target{0, 0, 1};
    auto img = s.matrix * es;
    for (std::size_t i = 0; i < 3; ++i) r.image.push_back(img[i] - target[i]);
    return r;
}

LatticePtr lattice_for(const Integer& lsq) { return NSLattice::make(IntMatrix{{lsq}}); }

CohTransform to_transform(const Solution& s) {
    auto lattice = lattice_for(s.lsq);
    return CohTransform(lattice, lattice, to_rational(s.matrix), 0, "picard-rank-one");
}

}  // namespace k3fm::pic1
