#pragma once

#include "joininv/zmatrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace joininv {

struct GcdViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RangeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Validated parameter tuple for the join construction, together with the
// auxiliary Bezout data the formulas use:
//   r*l2 - s*w1*w2 = 1   (canonical representative: 0 <= s < l2; r=1, s=0 if l2=1)
//   u1*w1 + u2*r*w2 = 1  (canonical representative: 0 <= u2 < w1 if w1 > 1)
//   d = gcd(n, l2)
struct JoinParams {
    long g = 1;
    long n = 1;
    Int w1 = 1, w2 = 1;
    Int l1 = 1, l2 = 1;
    Int r = 1, s = 0;
    Int u1 = 1, u2 = 0;
    Int d = 1;

    static JoinParams validate(long g, long n, const Int& w1, const Int& w2, const Int& l2);
    // Same, but with an explicit (not necessarily canonical) Bezout pair (r, s);
    // rejects pairs that do not satisfy r*l2 - s*w1*w2 = 1.
    static JoinParams validate_with_rs(long g, long n, const Int& w1, const Int& w2,
                                       const Int& l2, const Int& r, const Int& s);
};

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what);
};

// 2x2 exponent matrices of the Heegard-torus gluing maps; entry (i, j) is the
// exponent of input generator j in output generator i, so composition is
// matrix multiplication on the left.
struct HeegardMatrices {
    IntMatrix e_g, e_g_inv, e_f1, e_f2, e_f12;
};
HeegardMatrices heegard_exponent_matrices(const JoinParams& p);

// e_g * e_f12 == e_f2, e_g * e_g_inv == I, det e_g == 1, det e_f* == l2.
CheckReport verify_heegard_identities(const JoinParams& p);

// Exponent pair (on the two torus phases) of the clutching word over U cap V:
// B1 -> (-n w1, -n r w2); B2 -> (-n r w1, -n w2); B12 restricts B1.
enum class Block { B1, B2, B12 };
std::pair<Int, Int> clutching_exponents(const JoinParams& p, Block block);

// Action of the regluing map g on the two fiber classes in homology degree
// one, and the matching cohomology pullback coefficients: (-s w2^2, l2).
std::pair<Int, Int> g_on_h1(const JoinParams& p);
std::pair<Int, Int> g_on_h1_cohomology(const JoinParams& p);

// Cohomology groups indexed by degree.
struct CohomologyProfile {
    std::vector<FgAbGroup> groups;
    const FgAbGroup& operator[](std::size_t q) const { return groups[q]; }
    std::size_t top_degree() const { return groups.size() - 1; }
};

// H^*(circle bundle over genus-g surface, Euler number e; Z), degrees 0..3.
// Computed by the SNF route and cross-checked against the closed form.
CohomologyProfile circle_bundle_cohomology(const Int& euler, long genus);

// H^*(boundary of either block; Z), degrees 0..4.
CohomologyProfile boundary_cohomology(const JoinParams& p);

// H_1 of the intersection region: Z/n + Z^{1+2g}.
FgAbGroup h1_intersection(const JoinParams& p);

// The comparison maps on H_1 torsion induced by inclusion of the boundary
// into each block: Z/n -> Z/(n w_i), 1 -> w_i, as presented-group maps.
struct TorsionComparison {
    FgAbGroup h1_boundary;           // Z/n + Z^{1+2g}
    Int rho_m1, rho_m2;              // torsion projection on m1, m2 (= u1, u2 mod n)
    struct BlockMap {
        IntMatrix src_rel, dst_rel, map;
        FgAbGroup kernel, cokernel;
    } into_block1, into_block2;
};
TorsionComparison h1_torsion_comparison(const JoinParams& p);

// Restriction H^2(B_i) -> H^2(dB_i): reduction Z/(n w_i) -> Z/n on torsion and
// an explicit integral block on the 2g free generators.
struct H2Restriction {
    IntMatrix torsion_src_rel, torsion_dst_rel, torsion_map;
    FgAbGroup torsion_kernel, torsion_cokernel;
    IntMatrix free_block;            // 4g x 2g
};
H2Restriction restriction_h2_block_to_boundary(const JoinParams& p, int block);

// Euler element of the disc-bundle compactification of block i: the class
// (n, 0) in Z/(n w_i) + Z^{2g}, of order w_i.
struct DiscBundleEuler {
    Int torsion_component;           // n
    FgAbGroup ambient_torsion;       // Z/(n w_i)
    Int order;                       // w_i
};
DiscBundleEuler disc_bundle_euler(const JoinParams& p, int block);

// s^2 w1^2 w2^2 == 1 mod l2 and mod d; gcd(n w2, l2) == gcd(n, l2).
CheckReport verify_congruences(const JoinParams& p);

} // namespace joininv
