#include "k3fm/fm_transform.hpp"

#include <random>

namespace k3fm {

namespace {

Rational dot(const LatticePtr& lattice, const std::vector<Rational>& x, const DivisorClass& y) {
    return lattice->pair(x, y.rational_coords());
}

Rational square(const DivisorClass& x) { return Rational(intersect(x, x)); }

/// ch(F (x) O(l)) = (r, f + r l, t + f.l + r l^2/2).
ChVector twist(const ChVector& f, const DivisorClass& l) {
    ChVector out = f;
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] += f.r * Rational(l.coords()[i]);
    out.t += dot(f.lattice, f.f, l) + f.r * square(l) / 2;
    return out;
}

/// Riemann-Roch on a K3: chi = ch2 + 2 rank.
Rational chi(const ChVector& v) { return v.t + 2 * v.r; }

ChVector line_ch(const DivisorClass& l) {
    return ChVector{l.lattice(), 1, l.rational_coords(), square(l) / 2};
}

std::vector<Rational> scaled(const DivisorClass& x, const Rational& k) {
    auto v = x.rational_coords();
    for (auto& c : v) c *= k;
    return v;
}

void add_into(std::vector<Rational>& acc, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

const FormulaParams& require(const FormulaParams& p, bool ok, const char* what) {
    if (!ok) throw InputError("formula", std::string("displayed formula needs ") + what);
    return p;
}

}  // namespace

CohTransform::CohTransform(LatticePtr source, LatticePtr target, RatMatrix action, int shift_parity,
                           std::string origin)
    : source_(std::move(source)),
      target_(std::move(target)),
      action_(std::move(action)),
      shift_parity_(shift_parity & 1),
      origin_(std::move(origin)) {
    if (!source_ || !target_) throw LatticeMismatch("transform without lattices");
    if (action_.rows() != target_->rank() + 2 || action_.cols() != source_->rank() + 2)
        throw LatticeMismatch("transform matrix has the wrong shape for its lattices");
}

CohTransform CohTransform::identity(LatticePtr lattice) {
    const auto n = lattice->rank() + 2;
    return CohTransform(lattice, lattice, RatMatrix::identity(n), 0, "identity");
}

CohTransform CohTransform::shifted() const {
    RatMatrix negated = action_;
    for (std::size_t i = 0; i < negated.rows(); ++i)
        for (std::size_t j = 0; j < negated.cols(); ++j) negated(i, j) = -negated(i, j);
    CohTransform out(source_, target_, std::move(negated), shift_parity_ ^ 1, origin_);
    out.flagged_ = flagged_;
    return out;
}

ChVector pushforward_ch(const KernelSpec& k, const ChVector& input) {
    require_same_lattice(input.lattice, k.lattice(), "pushforward");
    const Rational chi_fa = chi(twist(input, k.a));
    const Rational chi_fc = chi(twist(input, k.c));
    const ChVector fcd = twist(twist(input, k.c), k.d);
    return chi_fa * line_ch(k.b) + chi_fc * line_ch(k.d) - fcd;
}

CohTransform from_kernel(const KernelSpec& k, const std::optional<IntMatrix>& identification, LatticePtr target) {
    const LatticePtr& source = k.lattice();
    const std::size_t n = source->rank();
    if (!target) target = source;
    IntMatrix phi = identification.value_or(IntMatrix::identity(n));
    if (phi.rows() != target->rank() || phi.cols() != n)
        throw LatticeMismatch("lattice identification has the wrong shape");
    if (phi.transpose() * target->gram() * phi != source->gram())
        throw InvariantViolation("identification is an isometry", "phi^T G_target phi != G_source");

    RatMatrix block(target->rank() + 2, n + 2);
    block(0, 0) = 1;
    block(target->rank() + 1, n + 1) = 1;
    for (std::size_t i = 0; i < target->rank(); ++i)
        for (std::size_t j = 0; j < n; ++j) block(i + 1, j + 1) = Rational(phi(i, j));

    RatMatrix action(n + 2, n + 2);
    for (std::size_t j = 0; j < n + 2; ++j) {
        std::vector<Rational> e(n + 2);
        e[j] = 1;
        const auto column = pushforward_ch(k, ChVector::unflatten(source, e)).flatten();
        for (std::size_t i = 0; i < n + 2; ++i) action(i, j) = column[i];
    }
    CohTransform t(source, target, block * action, 0, k.label);
    t.set_flagged_non_equivalence(!check_sufficient(k).numeric_conditions());
    return t;
}

ChVector apply(const CohTransform& t, const ChVector& c) {
    require_same_lattice(c.lattice, t.source(), "apply");
    return ChVector::unflatten(t.target(), t.action() * c.flatten());
}

ChernCharacter apply(const CohTransform& t, const ChernCharacter& c) {
    return ChernCharacter::from_vector(apply(t, c.to_vector()));
}

CohTransform compose(const CohTransform& s, const CohTransform& t) {
    require_same_lattice(t.target(), s.source(), "compose");
    CohTransform out(t.source(), s.target(), s.action() * t.action(), s.shift_parity() ^ t.shift_parity(),
                     s.origin() + " o " + t.origin());
    out.set_flagged_non_equivalence(s.flagged_non_equivalence() || t.flagged_non_equivalence());
    return out;
}

Rational determinant(const CohTransform& t) { return determinant(t.action()); }

std::optional<CohTransform> inverse(const CohTransform& t) {
    auto inv = inverse(t.action());
    if (!inv) return std::nullopt;
    return CohTransform(t.target(), t.source(), std::move(*inv), t.shift_parity(), "inverse(" + t.origin() + ")");
}

bool is_mukai_isometry(const CohTransform& t) {
    const std::size_t n = t.source()->rank() + 2;
    if (t.target()->rank() + 2 != n) return false;
    std::vector<ChVector> basis, images;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = 1;
        basis.push_back(ChVector::unflatten(t.source(), e));
        images.push_back(apply(t, basis.back()));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (euler_chi(images[i], images[j]) != euler_chi(basis[i], basis[j])) return false;
    return true;
}

std::optional<int> shift_between(const ChVector& x, const ChVector& y) {
    if (x == y) return 0;
    if (x == -y) return 1;
    return std::nullopt;
}

const char* to_string(FormulaId id) {
    switch (id) {
        case FormulaId::GeneralKernel: return "general-kernel";
        case FormulaId::NoCohomology: return "no-cohomology";
        case FormulaId::ReflexiveNondegenerate: return "reflexive-nondegenerate";
        case FormulaId::ReflexiveTypeI: return "reflexive-type-I";
        case FormulaId::ReflexiveTypeII: return "reflexive-type-II";
        case FormulaId::PicardRankOne: return "picard-rank-one";
    }
    return "?";
}

FormulaId parse_formula_id(const std::string& text) {
    for (auto id : {FormulaId::GeneralKernel, FormulaId::NoCohomology, FormulaId::ReflexiveNondegenerate,
                    FormulaId::ReflexiveTypeI, FormulaId::ReflexiveTypeII, FormulaId::PicardRankOne})
        if (text == to_string(id)) return id;
    throw InputError("formula", "unknown formula id '" + text + "'");
}

ChVector displayed_formula(FormulaId id, const FormulaParams& p, const ChVector& in) {
    const auto& L = in.lattice;
    const Rational& r = in.r;
    const Rational& t = in.t;
    const auto& f = in.f;
    ChVector out = ChVector::zero(L);

    switch (id) {
        case FormulaId::GeneralKernel: {
            require(p, p.kernel.has_value(), "a kernel");
            const auto& k = *p.kernel;
            require_same_lattice(L, k.lattice(), "displayed formula");
            const Rational a2 = square(k.a), b2 = square(k.b), c2 = square(k.c), d2 = square(k.d);
            const Rational cd(intersect(k.c, k.d));
            const Rational fa = dot(L, f, k.a), fc = dot(L, f, k.c);
            out.r = r * (a2 + c2 + 6) / 2 + fa + fc + 2 * t;
            // 1/2 r[(a^2+4)b + (c^2+2)d - 2c] + (f.a)b + (f.c)d - f + t(b+d)
            add_into(out.f, scaled(k.b, r * (a2 + 4) / 2 + fa + t));
            add_into(out.f, scaled(k.d, r * (c2 + 2) / 2 + fc + t));
            add_into(out.f, scaled(k.c, -r));
            for (std::size_t i = 0; i < f.size(); ++i) out.f[i] -= f[i];
            // 1/4 r(a^2b^2 + 4b^2 + c^2d^2 - 2c^2 + 2d^2 - 4c.d)
            //   + 1/2 f.((d^2-2)c + b^2 a - 2d) + 1/2 t(b^2 + d^2 - 2)
            out.t = r * (a2 * b2 + 4 * b2 + c2 * d2 - 2 * c2 + 2 * d2 - 4 * cd) / 4 +
                    ((d2 - 2) * fc + b2 * fa - 2 * dot(L, f, k.d)) / 2 + t * (b2 + d2 - 2) / 2;
            return out;
        }
        case FormulaId::NoCohomology: {
            require(p, p.l.has_value(), "the class l");
            const auto& l = *p.l;
            const Rational fl = dot(L, f, l);
            out.r = r + fl + 2 * t;
            // -(f.l + t) l - f, reading the unbound symbol as c1(F)
            out.f = scaled(l, -(fl + t));
            for (std::size_t i = 0; i < f.size(); ++i) out.f[i] -= f[i];
            out.t = -2 * fl - 3 * t;
            return out;
        }
        case FormulaId::ReflexiveNondegenerate: {
            require(p, p.l && p.h, "the classes h and l");
            const auto &l = *p.l, &h = *p.h;
            const DivisorClass h_hat = 2 * l + Integer(5) * h;
            const DivisorClass l_hat = 5 * l + Integer(12) * h;
            const Rational fl = dot(L, f, l), fh = dot(L, f, h);
            out.r = -r + fl + 2 * t;
            out.f = scaled(h_hat, dot(L, f, l + Integer(2) * h));
            add_into(out.f, scaled(l_hat, fh - t));
            for (std::size_t i = 0; i < f.size(); ++i) out.f[i] -= f[i];
            out.t = -2 * fl - 5 * t;
            return out;
        }
        case FormulaId::ReflexiveTypeI: {
            require(p, p.l && p.h && p.d1 && p.d2, "the classes h, l, d1 and d2");
            const auto &l = *p.l, &h = *p.h, &d1 = *p.d1, &d2 = *p.d2;
            const Rational fl = dot(L, f, l), fh = dot(L, f, h);
            out.r = -r + fl + 2 * t;
            out.f = scaled(l, -t);
            add_into(out.f, scaled(l + Integer(2) * h, -fh));
            add_into(out.f, scaled(l, fl));
            add_into(out.f, scaled(d1, -dot(L, f, d1)));
            add_into(out.f, scaled(d2, -dot(L, f, d2)));
            for (std::size_t i = 0; i < f.size(); ++i) out.f[i] -= f[i];
            out.t = -2 * fl - 5 * t;
            return out;
        }
        case FormulaId::ReflexiveTypeII: {
            require(p, p.l && p.h && p.d1 && p.d2, "the classes h, l, d1 and d2");
            const auto &l = *p.l, &h = *p.h, &d1 = *p.d1, &d2 = *p.d2;
            const Rational fl = dot(L, f, l);
            out.r = -r + fl + 2 * t;
            out.f = scaled(h, fl);
            add_into(out.f, scaled(d2, dot(L, f, d1)));
            add_into(out.f, scaled(d1, -dot(L, f, 2 * d1 + d2)));
            add_into(out.f, scaled(d2 - 3 * d1 + Integer(2) * h, t));
            for (std::size_t i = 0; i < f.size(); ++i) out.f[i] -= f[i];
            out.t = -2 * fl - 5 * t;
            return out;
        }
        case FormulaId::PicardRankOne: {
            if (L->rank() != 1) throw InputError("formula", "the Picard rank one block needs a rank-1 lattice");
            const Integer lsq = L->gram()(0, 0);
            if (lsq <= 0 || lsq % 8 != 4)
                throw InputError("formula", "generator square " + lsq.str() + " is not of the form 4(2n+1)");
            const Rational n((lsq / 4 - 1) / 2);
            const Rational c = f[0];
            const Rational l2(lsq);
            out.r = (2 * n + 3) * r + c * l2 + 2 * t;
            out.f[0] = (n + 1) * r + c * (4 * n + 1) + t;
            out.t = 2 * (n * n - 1) * r + (n - 1) * c * l2 + (2 * n - 1) * t;
            return out;
        }
    }
    throw InputError("formula", "unknown formula id");
}

std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<Rational>& v,
                                                          const std::vector<DivisorClass>& basis) {
    const std::size_t k = basis.size();
    if (k == 0) return std::nullopt;
    const std::size_t n = v.size();
    // Normal equations (B^T B) x = B^T v, then verify B x = v exactly.
    RatMatrix btb(k, k);
    std::vector<Rational> btv(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t m = 0; m < n; ++m)
                btb(i, j) += Rational(basis[i].coords()[m]) * Rational(basis[j].coords()[m]);
        for (std::size_t m = 0; m < n; ++m) btv[i] += Rational(basis[i].coords()[m]) * v[m];
    }
    auto inv = inverse(btb);
    if (!inv) return std::nullopt;
    auto x = *inv * btv;
    for (std::size_t m = 0; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += x[i] * Rational(basis[i].coords()[m]);
        if (acc != v[m]) return std::nullopt;
    }
    return x;
}

DiffReport crosscheck_specialized(const CohTransform& t, FormulaId id, const FormulaParams& params,
                                  std::span<const ChVector> grid) {
    DiffReport report;
    report.formula = id;
    std::vector<DivisorClass> basis;
    if (id == FormulaId::ReflexiveNondegenerate && params.l && params.h) {
        basis = {2 * *params.l + Integer(5) * *params.h, 5 * *params.l + Integer(12) * *params.h};
        report.basis_names = {"h_hat", "l_hat"};
    } else if (id == FormulaId::PicardRankOne) {
        report.basis_names = {"l_hat"};
    }
    for (const auto& input : grid) {
        ChVector engine = apply(t, input);
        ChVector displayed = displayed_formula(id, params, input);
        displayed.lattice = engine.lattice;
        ChVector diff = displayed - engine;
        ++report.points_checked;
        if (diff == ChVector::zero(diff.lattice)) continue;
        DiffEntry entry{input, std::move(engine), std::move(displayed), diff, std::nullopt};
        if (!basis.empty()) entry.diff_c1_in_basis = coordinates_in_basis(diff.f, basis);
        else if (id == FormulaId::PicardRankOne) entry.diff_c1_in_basis = diff.f;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<ChVector> default_grid(const LatticePtr& lattice) {
    const std::size_t n = lattice->rank();
    std::vector<ChVector> grid;
    std::vector<int> coords(n, -3);
    for (;;) {
        for (int r = -3; r <= 3; ++r)
            for (int t = -5; t <= 5; ++t) {
                ChVector v = ChVector::zero(lattice);
                v.r = r;
                v.t = t;
                for (std::size_t i = 0; i < n; ++i) v.f[i] = coords[i];
                grid.push_back(std::move(v));
            }
        std::size_t i = 0;
        while (i < n && coords[i] == 3) coords[i++] = -3;
        if (i == n) break;
        ++coords[i];
    }
    return grid;
}

std::vector<ChVector> random_grid(const LatticePtr& lattice, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3), tdist(-5, 5);
    std::vector<ChVector> grid;
    grid.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        ChVector v = ChVector::zero(lattice);
        v.r = small(rng);
        for (auto& c : v.f) c = small(rng);
        v.t = tdist(rng);
        grid.push_back(std::move(v));
    }
    return grid;
}

}  // namespace k3fm
