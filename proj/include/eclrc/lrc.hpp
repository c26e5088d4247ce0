#ifndef ECLRC_LRC_HPP
#define ECLRC_LRC_HPP

// Locally repairable codes from a subgroup G = TA of automorphisms.
//
// The fixed field of G is generated by a function z whose zeros are the
// G-orbit of O (each with multiplicity |A|) and whose poles are one free
// orbit, the pole fiber P_1..P_{r+1}. Messages are coefficient vectors on
//     z^j            (0 <= j <= t-1)
//     z^j w_i        (1 <= i <= r-1, 0 <= j <= t-2)
// in that order, where w_i has simple poles exactly at P_1..P_{i+1}. The
// code evaluates at free orbits away from the poles of z; the pole fiber
// may be added with every function multiplied by z^(1-t) before evaluation.
// Each fiber is a repair group of size r+1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eclrc/autgroup.hpp"
#include "eclrc/funcfield.hpp"
#include "eclrc/linalg.hpp"

namespace eclrc {

struct Fiber {
    std::size_t id = 0;  // position among the free orbits of G
    std::vector<Point> points;
};

using Rows = std::vector<std::vector<std::uint32_t>>;

struct LrcCode {
    CurvePtr curve;
    Subgroup group;
    std::size_t a_order = 0;  // |G meet Aut(E,O)|
    std::size_t t_order = 0;  // |G| / |A|
    Fiber pole_fiber;
    FuncElem z;
    std::vector<FuncElem> w;  // w[0] = 1
    std::vector<Fiber> fibers;  // plain fibers, in column order
    std::size_t t = 0, m = 0;
    bool include_pole_fiber = false;
    std::size_t n = 0, k = 0, d_design = 0, r = 0;
    std::vector<Point> columns;
    Rows generator;  // k x n
    std::vector<std::vector<std::size_t>> repair_groups;
    /// Per repair group, the (r+1) x r matrix of local basis values.
    std::vector<Rows> local_matrices;
    /// Column index -> repair group index.
    std::vector<std::size_t> group_of;

    const Field& field() const { return curve->field(); }
};

struct ZeroPoleData {
    std::vector<Point> zero_orbit;  // orbit of O
    std::size_t a_order = 0;
};

/// Orbit of O and |G meet Aut(E,O)|.
ZeroPoleData zero_orbit(const Curve& curve, const Subgroup& g);

/// Free G-orbits, in canonical order.
std::vector<Fiber> free_fibers(const Curve& curve, const Subgroup& g);

/// The G-invariant function with divisor |A| * (orbit of O) - (pole fiber),
/// scaled so the numerator term of highest pole order has coefficient 1.
/// Throws NoSuchFunction or InvarianceFailure.
FuncElem construct_z(const CurvePtr& curve, const Subgroup& g, const Fiber& pole_fiber);

/// w_0 = 1 and, for i >= 1, the lexicographically first combination of the
/// L(P_1 + ... + P_{i+1}) basis with a simple pole at each P_k. When a spare
/// fiber is given, independence is certified on it (DependenceDetected).
std::vector<FuncElem> construct_w(const CurvePtr& curve, const Fiber& pole_fiber, std::size_t r,
                                  const Fiber* spare = nullptr);

/// First m free orbits disjoint from the zeros and poles of z.
std::vector<Fiber> select_fibers(const Curve& curve, const Subgroup& g, const FuncElem& z, std::size_t m);

struct BuildOptions {
    bool include_pole_fiber = true;
    /// Pole fiber chosen as the free orbit containing this point; default
    /// is the first free orbit.
    std::optional<Point> pole_point;
};

/// n = m(r+1) in both modes; with the pole fiber included it counts as one
/// of the m fibers. Throws ParameterViolation, NotEnoughFibers, MinorSingular.
LrcCode build_code(const CurvePtr& curve, const Subgroup& g, std::size_t t, std::size_t m,
                   const BuildOptions& opts = {});

std::vector<std::uint32_t> encode(const LrcCode& code, const std::vector<std::uint32_t>& message);

/// Recovers an erased coordinate from the rest of its repair group.
std::uint32_t repair(const LrcCode& code, const std::vector<std::uint32_t>& received,
                     const std::vector<bool>& erased, std::size_t idx);

std::vector<std::uint32_t> erasure_decode(const LrcCode& code, const std::vector<std::uint32_t>& received,
                                          const std::vector<bool>& erased);

/// Exhaustive minimum distance; throws SearchSpaceTooLarge when q^k > 2^24.
std::size_t min_distance_exact(const LrcCode& code);

/// Codeword of prod_{i<t} (z - beta_i) over the first t-1 plain fibers.
std::vector<std::uint32_t> min_weight_witness(const LrcCode& code);
std::vector<std::uint32_t> witness_message(const LrcCode& code);

std::size_t weight(const std::vector<std::uint32_t>& word);

struct OptimalityReport {
    std::size_t n = 0, k = 0, r = 0, d_design = 0;
    std::size_t singleton_bound = 0;  // n - k - ceil(k/r) + 2
    bool identity_holds = false;
    std::optional<std::size_t> d_exact;
    std::size_t witness_weight = 0;
    bool certified = false;  // exact match, or design bound met by witness
};

OptimalityReport verify_optimal(const LrcCode& code, bool try_exact = true);

struct ParameterRow {
    std::string family;  // "involution", "torsion-stabilizer", "order-9-abelian"
    std::size_t h = 0, a_order = 0, t = 0, m = 0;
    std::size_t n = 0, k = 0, d = 0, r = 0;
};

std::vector<ParameterRow> parameter_table(std::uint64_t q);

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r);

}  // namespace eclrc

#endif
