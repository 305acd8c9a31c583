#include "k3fm/exact.hpp"

#include <limits>
#include <utility>

namespace k3fm {

InvariantViolation::InvariantViolation(std::string identity, const std::string& detail)
    : std::domain_error(identity + ": " + detail), identity_(std::move(identity)) {}

InputError::InputError(std::string kind, const std::string& message)
    : std::invalid_argument(message), kind_(std::move(kind)) {}

std::string to_fraction_string(const Rational& q) {
    // cpp_rational is always kept normalized with a positive denominator.
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw InputError("rational", "zero denominator in '" + text + "'");
        return Rational(p, q);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("rational", "cannot parse rational '" + text + "'");
    }
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Integer to_integer(const Rational& q, const char* what) {
    if (!is_integral(q))
        throw InvariantViolation(std::string(what) + " integral", "value " + to_fraction_string(q) + " is not an integer");
    return boost::multiprecision::numerator(q);
}

std::optional<long long> to_int64(const Integer& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) return std::nullopt;
    return static_cast<long long>(v);
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

Rational determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw LatticeMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational factor = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw LatticeMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        Rational p = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rational factor = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace k3fm
