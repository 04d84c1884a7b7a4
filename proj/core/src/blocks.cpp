#include "joininv/blocks.hpp"

namespace joininv {

namespace {

Int igcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// x*a + y*b = gcd(a,b) for positive a, b.
void exgcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return;
    }
    Int x1, y1;
    exgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

// Non-negative remainder.
Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// u1*w1 + u2*(r*w2) = 1 with 0 <= u2 < w1; gcd(w1, r*w2) = 1 holds because
// r*l2 = 1 mod w1 and gcd(w1, w2) = 1.
void fill_u(JoinParams& p) {
    Int rw2 = p.r * p.w2;
    Int x, y;
    exgcd(p.w1, rw2, x, y);      // x*w1 + y*rw2 = 1
    p.u2 = mod(y, p.w1);
    p.u1 = (1 - p.u2 * rw2) / p.w1;
}

void fill_bezout(JoinParams& p) {
    // r*l2 - s*(w1*w2) = 1 with the canonical representative 0 <= s < l2.
    Int ww = p.w1 * p.w2;
    if (p.l2 == 1) {
        p.r = 1;
        p.s = 0;
    } else {
        Int x, y;
        exgcd(p.l2, ww, x, y);   // x*l2 + y*ww = 1
        p.s = mod(-y, p.l2);
        p.r = (1 + p.s * ww) / p.l2;
    }
    fill_u(p);
}

void check_ranges(long g, long n, const Int& w1, const Int& w2, const Int& l2) {
    if (g < 1) throw RangeViolation("genus must be >= 1");
    if (n < 1) throw RangeViolation("n must be >= 1");
    if (w1 < 1 || w2 < 1) throw RangeViolation("weights must be >= 1");
    if (l2 < 1) throw RangeViolation("l2 must be >= 1");
}

void check_gcds(const Int& w1, const Int& w2, const Int& l2) {
    if (igcd(w1, w2) != 1) throw GcdViolation("w1 and w2 must be coprime");
    if (igcd(l2, w1 * w2) != 1) throw GcdViolation("l2 must be coprime to w1*w2");
}

} // namespace

JoinParams JoinParams::validate(long g, long n, const Int& w1, const Int& w2, const Int& l2) {
    check_ranges(g, n, w1, w2, l2);
    check_gcds(w1, w2, l2);
    JoinParams p;
    p.g = g;
    p.n = n;
    p.w1 = w1;
    p.w2 = w2;
    p.l1 = 1;
    p.l2 = l2;
    p.d = igcd(Int(n), l2);
    fill_bezout(p);
    return p;
}

JoinParams JoinParams::validate_with_rs(long g, long n, const Int& w1, const Int& w2,
                                        const Int& l2, const Int& r, const Int& s) {
    JoinParams p = validate(g, n, w1, w2, l2);
    if (r * l2 - s * w1 * w2 != 1)
        throw RangeViolation("(r, s) does not satisfy r*l2 - s*w1*w2 = 1");
    p.r = r;
    p.s = s;
    fill_u(p);
    return p;
}

void CheckReport::require(bool cond, const std::string& what) {
    if (!cond) {
        ok = false;
        failures.push_back(what);
    }
}

HeegardMatrices heegard_exponent_matrices(const JoinParams& p) {
    const Int& s = p.s;
    const Int& l2 = p.l2;
    Int w1s = p.w1 * p.w1, w2s = p.w2 * p.w2;
    Int diag = p.r * (1 - s * p.w1 * p.w2);
    HeegardMatrices m;
    m.e_g = IntMatrix::from_rows({{diag, s * w1s}, {-s * w2s, l2}});
    m.e_g_inv = IntMatrix::from_rows({{l2, -s * w1s}, {s * w2s, diag}});
    m.e_f12 = IntMatrix::from_rows({{l2, Int(0)}, {s * w2s, Int(1)}});
    m.e_f1 = m.e_f12;
    m.e_f2 = IntMatrix::from_rows({{Int(1), s * w1s}, {Int(0), l2}});
    return m;
}

CheckReport verify_heegard_identities(const JoinParams& p) {
    HeegardMatrices m = heegard_exponent_matrices(p);
    CheckReport rep;
    rep.require(m.e_g * m.e_f12 == m.e_f2, "E_g * E_f12 == E_f2");
    rep.require(m.e_g * m.e_g_inv == IntMatrix::identity(2), "E_g * E_g_inv == I");
    rep.require(det(m.e_g) == 1, "det(E_g) == 1");
    rep.require(det(m.e_f1) == p.l2, "det(E_f1) == l2");
    rep.require(det(m.e_f2) == p.l2, "det(E_f2) == l2");
    rep.require(det(m.e_f12) == p.l2, "det(E_f12) == l2");
    return rep;
}

std::pair<Int, Int> clutching_exponents(const JoinParams& p, Block block) {
    Int n(p.n);
    switch (block) {
        case Block::B1:
        case Block::B12:
            return {-n * p.w1, -n * p.r * p.w2};
        case Block::B2:
            return {-n * p.r * p.w1, -n * p.w2};
    }
    throw std::invalid_argument("clutching_exponents: bad block");
}

std::pair<Int, Int> g_on_h1(const JoinParams& p) {
    return {-p.s * p.w2 * p.w2, p.l2};
}

std::pair<Int, Int> g_on_h1_cohomology(const JoinParams& p) {
    // The pullback coefficients coincide with the homology images.
    return g_on_h1(p);
}

CohomologyProfile circle_bundle_cohomology(const Int& euler, long genus) {
    if (euler < 1) throw RangeViolation("circle_bundle_cohomology: euler must be >= 1");
    if (genus < 1) throw RangeViolation("circle_bundle_cohomology: genus must be >= 1");
    // H^2 torsion from the Mayer-Vietoris matrix of the clutching description.
    IntMatrix mv = IntMatrix::from_rows({{Int(0), euler}, {Int(1), Int(-1)}});
    FgAbGroup h2 = cokernel(mv).direct_sum(FgAbGroup::free(2 * genus));
    CohomologyProfile profile;
    profile.groups = {FgAbGroup::free(1), FgAbGroup::free(2 * genus), h2, FgAbGroup::free(1)};
    // Closed form cross-check: Z/e + Z^{2g} in degree 2.
    FgAbGroup closed = FgAbGroup::cyclic(euler).direct_sum(FgAbGroup::free(2 * genus));
    if (!(h2 == closed))
        throw std::logic_error("circle_bundle_cohomology: SNF route disagrees with closed form");
    return profile;
}

CohomologyProfile boundary_cohomology(const JoinParams& p) {
    long g2 = 2 * p.g;
    FgAbGroup zn = FgAbGroup::cyclic(Int(p.n));
    CohomologyProfile profile;
    profile.groups = {
        FgAbGroup::free(1),
        FgAbGroup::free(g2 + 1),
        zn.direct_sum(FgAbGroup::free(2 * g2)),
        zn.direct_sum(FgAbGroup::free(g2 + 1)),
        FgAbGroup::free(1),
    };
    return profile;
}

FgAbGroup h1_intersection(const JoinParams& p) {
    return FgAbGroup::cyclic(Int(p.n)).direct_sum(FgAbGroup::free(2 * p.g + 1));
}

TorsionComparison h1_torsion_comparison(const JoinParams& p) {
    TorsionComparison out;
    out.h1_boundary = h1_intersection(p);
    out.rho_m1 = mod(p.u1, Int(p.n));
    out.rho_m2 = mod(p.u2, Int(p.n));
    auto make = [&](const Int& w) {
        TorsionComparison::BlockMap bm;
        bm.src_rel = IntMatrix::from_rows({{Int(p.n)}});
        bm.dst_rel = IntMatrix::from_rows({{Int(p.n) * w}});
        bm.map = IntMatrix::from_rows({{w}});
        auto [ker, coker] = presented_hom_kernel_cokernel(bm.src_rel, bm.dst_rel, bm.map);
        bm.kernel = ker;
        bm.cokernel = coker;
        return bm;
    };
    out.into_block1 = make(p.w1);
    out.into_block2 = make(p.w2);
    return out;
}

H2Restriction restriction_h2_block_to_boundary(const JoinParams& p, int block) {
    if (block != 1 && block != 2)
        throw std::invalid_argument("restriction_h2_block_to_boundary: block must be 1 or 2");
    const Int w = block == 1 ? p.w1 : p.w2;
    H2Restriction out;
    out.torsion_src_rel = IntMatrix::from_rows({{Int(p.n) * w}});
    out.torsion_dst_rel = IntMatrix::from_rows({{Int(p.n)}});
    out.torsion_map = IntMatrix::from_rows({{Int(1)}});
    auto [ker, coker] = presented_hom_kernel_cokernel(out.torsion_src_rel, out.torsion_dst_rel,
                                                      out.torsion_map);
    out.torsion_kernel = ker;
    out.torsion_cokernel = coker;

    long g2 = 2 * p.g;
    out.free_block = IntMatrix(2 * g2, g2);
    for (long j = 0; j < g2; ++j) {
        if (block == 1) {
            out.free_block.at(j, j) = 1;
        } else {
            out.free_block.at(j, j) = -p.s * p.w2 * p.w2;
            out.free_block.at(g2 + j, j) = p.l2;
        }
    }
    return out;
}

DiscBundleEuler disc_bundle_euler(const JoinParams& p, int block) {
    if (block != 1 && block != 2)
        throw std::invalid_argument("disc_bundle_euler: block must be 1 or 2");
    const Int w = block == 1 ? p.w1 : p.w2;
    DiscBundleEuler out;
    out.torsion_component = p.n;
    out.ambient_torsion = FgAbGroup::cyclic(Int(p.n) * w);
    out.order = (Int(p.n) * w) / igcd(Int(p.n), Int(p.n) * w);
    return out;
}

CheckReport verify_congruences(const JoinParams& p) {
    CheckReport rep;
    Int ww = p.w1 * p.w2;
    rep.require(p.r * p.l2 - p.s * ww == 1, "r*l2 - s*w1*w2 == 1");
    Int sq = p.s * p.s * ww * ww;
    rep.require(mod(sq - 1, p.l2) == 0, "s^2 w1^2 w2^2 == 1 (mod l2)");
    rep.require(p.d == 1 || mod(sq - 1, p.d) == 0, "s^2 w1^2 w2^2 == 1 (mod d)");
    rep.require(igcd(Int(p.n) * p.w2, p.l2) == igcd(Int(p.n), p.l2),
                "gcd(n*w2, l2) == gcd(n, l2)");
    return rep;
}

} // namespace joininv
