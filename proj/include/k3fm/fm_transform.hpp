#pragma once

// The linear map a Fourier-Mukai transform induces on Chern characters.
//
// The engine is the pushforward identity
//   ch(Phi F) = chi(F A) ch(B) + chi(F C) ch(D) - ch(F C D),
// obtained by pushing the kernel sequence forward. The closed-form blocks for
// particular kernels are kept separately (displayed_formula) and compared
// against the engine by crosscheck_specialized; they are never used to
// compute transforms.

#include "k3fm/fm_kernel.hpp"
#include "k3fm/mukai.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k3fm {

class CohTransform {
public:
    /// `action` is (target rank + 2) x (source rank + 2) in the bases
    /// {rank, NS basis, ch2}.
    CohTransform(LatticePtr source, LatticePtr target, RatMatrix action, int shift_parity = 0,
                 std::string origin = {});

    static CohTransform identity(LatticePtr lattice);

    const LatticePtr& source() const noexcept { return source_; }
    const LatticePtr& target() const noexcept { return target_; }
    const RatMatrix& action() const noexcept { return action_; }
    /// Parity of the overall shift applied on top of the kernel transform.
    int shift_parity() const noexcept { return shift_parity_; }
    const std::string& origin() const noexcept { return origin_; }
    /// Set by from_kernel when the kernel fails a + b = c + d or (a - c)^2 = -4.
    bool flagged_non_equivalence() const noexcept { return flagged_; }
    void set_flagged_non_equivalence(bool flag) { flagged_ = flag; }

    /// Phi[1]: negates every Chern character and flips the shift parity.
    CohTransform shifted() const;

private:
    LatticePtr source_;
    LatticePtr target_;
    RatMatrix action_;
    int shift_parity_ = 0;
    std::string origin_;
    bool flagged_ = false;
};

/// Evaluates the pushforward identity for one input triple.
ChVector pushforward_ch(const KernelSpec& k, const ChVector& input);

/// Builds the induced map. `identification`, when given, is an isometry from
/// the source lattice onto `target` applied to the c1 part (the lattice shadow
/// of the isomorphism Y -> X); otherwise the target is the source lattice.
CohTransform from_kernel(const KernelSpec& k, const std::optional<IntMatrix>& identification = std::nullopt,
                         LatticePtr target = nullptr);

ChVector apply(const CohTransform& t, const ChVector& c);
/// Throws InvariantViolation when the image has a non-integral rank or c1.
ChernCharacter apply(const CohTransform& t, const ChernCharacter& c);

/// s o t.
CohTransform compose(const CohTransform& s, const CohTransform& t);
Rational determinant(const CohTransform& t);
std::optional<CohTransform> inverse(const CohTransform& t);

/// Checks chi(T a, T b) = chi(a, b) on all pairs of basis triples.
bool is_mukai_isometry(const CohTransform& t);

/// 0 when x = y, 1 when x = -y != 0, nullopt otherwise.
std::optional<int> shift_between(const ChVector& x, const ChVector& y);

enum class FormulaId {
    GeneralKernel,           ///< the general four-class block
    NoCohomology,            ///< kernel (O, O, L, L^*)
    ReflexiveNondegenerate,  ///< kernel (H^-1, L^3H^7, LH, L^2H^5)
    ReflexiveTypeI,
    ReflexiveTypeII,
    PicardRankOne,
};

const char* to_string(FormulaId id);
/// Throws InputError("formula") for unknown ids.
FormulaId parse_formula_id(const std::string& text);

struct FormulaParams {
    std::optional<KernelSpec> kernel;  ///< GeneralKernel
    std::optional<DivisorClass> l;     ///< NoCohomology, reflexive blocks
    std::optional<DivisorClass> h;     ///< reflexive blocks
    std::optional<DivisorClass> d1, d2;///< degenerate reflexive blocks
};

/// Evaluates the closed-form block literally. For NoCohomology the unbound
/// symbol in the c1 line is read as c1(F). For PicardRankOne the input
/// lattice must have rank 1 with generator square 4(2n+1), and the input c1
/// is c * l.
ChVector displayed_formula(FormulaId id, const FormulaParams& params, const ChVector& input);

struct DiffEntry {
    ChVector input;
    ChVector engine;
    ChVector displayed;
    ChVector diff;  ///< displayed - engine
    /// c1 part of diff in the block's natural basis, when it has one.
    std::optional<std::vector<Rational>> diff_c1_in_basis;
};

struct DiffReport {
    FormulaId formula;
    std::size_t points_checked = 0;
    std::vector<std::string> basis_names;  ///< empty: lattice coordinates
    std::vector<DiffEntry> entries;        ///< only inputs with a nonzero difference

    bool empty() const { return entries.empty(); }
};

DiffReport crosscheck_specialized(const CohTransform& t, FormulaId id, const FormulaParams& params,
                                  std::span<const ChVector> grid);

/// Every triple with |r| <= 3, c1 coordinates in [-3, 3], |t| <= 5.
std::vector<ChVector> default_grid(const LatticePtr& lattice);
/// Uniform integer triples with |r| <= 3, coordinates in [-3, 3], |t| <= 5.
std::vector<ChVector> random_grid(const LatticePtr& lattice, std::size_t count, std::uint64_t seed);

/// Coordinates of v in the given basis of a sublattice, if v lies in its
/// rational span.
std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<Rational>& v,
                                                          const std::vector<DivisorClass>& basis);

}  // namespace k3fm
