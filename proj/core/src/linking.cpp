#include "joininv/linking.hpp"

#include "joininv/mvengine.hpp"

#include <sstream>

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

} // namespace

QzResidue QzResidue::make(const Int& p, const Int& q) {
    if (q == 0) throw std::invalid_argument("QzResidue: zero denominator");
    Int den = q < 0 ? -q : q;
    Int num = p % den;
    if (num < 0) num += den;
    Int g = igcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    QzResidue r;
    r.num = num;
    r.den = den;
    return r;
}

QzResidue QzResidue::operator+(const QzResidue& other) const {
    return make(num * other.den + other.num * den, den * other.den);
}

QzResidue QzResidue::operator-() const { return make(-num, den); }

QzResidue QzResidue::scaled(const Int& k) const { return make(k * num, den); }

std::string QzResidue::to_string() const {
    if (num == 0) return "0";
    return num.str() + "/" + den.str();
}

IntMatrix surface_cup_pairing(long genus) {
    if (genus < 1) throw RangeViolation("surface_cup_pairing: genus must be >= 1");
    IntMatrix m(2 * genus, 2 * genus);
    for (long i = 0; i < genus; ++i) {
        m.at(2 * i, 2 * i + 1) = 1;
        m.at(2 * i + 1, 2 * i) = -1;
    }
    return m;
}

LinkingForm linking_form_h2(const JoinParams& p) {
    LinkingForm f;
    f.expected_symmetry = LinkingForm::Symmetry::skew;
    if (p.l2 == 1) return f;  // trivial torsion, empty form
    long g2 = 2 * p.g;
    f.torsion_group = FgAbGroup::from_factors(0, std::vector<Int>(g2, p.l2));
    IntMatrix pairing = surface_cup_pairing(p.g);
    for (long i = 0; i < p.g; ++i) {
        f.basis.push_back("A" + std::to_string(i + 1));
        f.basis.push_back("B" + std::to_string(i + 1));
    }
    f.matrix.assign(g2, std::vector<QzResidue>(g2));
    for (long i = 0; i < g2; ++i)
        for (long j = 0; j < g2; ++j)
            f.matrix[i][j] = QzResidue::make(pairing.at(i, j), p.l2);
    return f;
}

LinkingForm linking_form_h1h3(const JoinParams& p) {
    LinkingForm f;
    f.expected_symmetry = LinkingForm::Symmetry::symmetric;
    if (p.d == 1) return f;
    f.torsion_group = FgAbGroup::cyclic(p.d);
    f.basis = {"t"};
    f.matrix = {{QzResidue::make(1, p.d)}};
    return f;
}

bool check_symmetry(const LinkingForm& f, long deg_n, long dim_m) {
    bool negate = ((deg_n + 1) * (dim_m - deg_n)) % 2 != 0;
    const auto& m = f.matrix;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            QzResidue expected = negate ? -m[i][j] : m[i][j];
            if (!(m[j][i] == expected)) return false;
        }
    return true;
}

bool is_nondegenerate(const LinkingForm& f) {
    const std::vector<Int>& orders = f.torsion_group.invariant_factors();
    const std::size_t n = orders.size();
    if (f.matrix.size() != n)
        throw std::invalid_argument("is_nondegenerate: matrix/group size mismatch");
    if (n == 0) return true;

    // Adjoint in dual coordinates: g_i -> sum_j (lambda_ij * o_j) phi_j where
    // phi_j has order o_j.  The scaled entries must be integers.
    IntMatrix map(n, n), src_rel(n, n), dst_rel(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        src_rel.at(j, j) = orders[j];
        dst_rel.at(j, j) = orders[j];
        for (std::size_t i = 0; i < n; ++i) {
            const QzResidue& x = f.matrix[i][j];
            Int scaled = x.num * orders[j];
            if (scaled % x.den != 0)
                throw std::invalid_argument(
                    "is_nondegenerate: entry denominator does not divide generator order");
            map.at(j, i) = scaled / x.den;
        }
    }
    auto [kernel, coker] = presented_hom_kernel_cokernel(src_rel, dst_rel, map);
    (void)coker;
    return kernel.is_trivial();
}

Fingerprint fingerprint(const JoinParams& p) {
    Fingerprint fp;
    fp.g = p.g;
    fp.d = p.d;
    fp.l2 = p.l2;
    CohomologyProfile homology = integral_homology(p);
    for (const FgAbGroup& h : homology.groups) fp.homology.push_back(h.to_string());

    LinkingForm l1 = linking_form_h1h3(p);
    fp.lambda1_value = l1.matrix.empty() ? "-" : l1.matrix[0][0].to_string();

    LinkingForm l2 = linking_form_h2(p);
    if (l2.matrix.empty()) {
        fp.lambda2_certificate = "-";
    } else {
        std::ostringstream os;
        os << p.g << " hyperbolic block(s) [[0, " << QzResidue::make(1, p.l2).to_string()
           << "], [" << QzResidue::make(-1, p.l2).to_string() << ", 0]] over "
           << l2.torsion_group.to_string();
        fp.lambda2_certificate = os.str();
    }

    std::ostringstream key;
    key << "g=" << fp.g << ";d=" << fp.d << ";l2=" << fp.l2 << ";H=[";
    for (std::size_t i = 0; i < fp.homology.size(); ++i)
        key << (i ? "," : "") << fp.homology[i];
    key << "];lambda1=" << fp.lambda1_value << ";lambda2=" << fp.lambda2_certificate;
    fp.key = key.str();
    return fp;
}

} // namespace joininv
