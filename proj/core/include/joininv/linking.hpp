#pragma once

#include "joininv/blocks.hpp"

#include <string>
#include <vector>

namespace joininv {

// Canonical reduced element of Q/Z: 0 <= num < den, gcd(num, den) = 1
// (zero is stored as 0/1).
struct QzResidue {
    Int num = 0;
    Int den = 1;

    static QzResidue make(const Int& p, const Int& q);
    QzResidue operator+(const QzResidue& other) const;
    QzResidue operator-() const;
    QzResidue scaled(const Int& k) const;  // k * x in Q/Z
    bool operator==(const QzResidue&) const = default;
    std::string to_string() const;         // "0" or "p/q"
};

struct LinkingForm {
    enum class Symmetry { symmetric, skew };
    FgAbGroup torsion_group;
    std::vector<std::string> basis;
    std::vector<std::vector<QzResidue>> matrix;
    Symmetry expected_symmetry = Symmetry::symmetric;
};

// Intersection pairing matrix on H^1(Sigma_g) in the basis A1,B1,...,Ag,Bg.
IntMatrix surface_cup_pairing(long genus);

// lambda_2 on torsion(H^3) = (Z/l2)^{2g}: I(x,y) * (1*1)/l2, skew.
LinkingForm linking_form_h2(const JoinParams& p);

// lambda_1 on Z/d: (a,b) -> a*b/d, symmetric; empty when d = 1.
LinkingForm linking_form_h1h3(const JoinParams& p);

// Entrywise lambda(y,x) = (-1)^{(n+1)(m-n)} lambda(x,y) in Q/Z.
bool check_symmetry(const LinkingForm& f, long deg_n, long dim_m);

// Adjoint torsion -> Hom(torsion, Q/Z) injective, computed by clearing
// denominators against the generator orders and running the presented-group
// kernel machinery.
bool is_nondegenerate(const LinkingForm& f);

// Canonical invariant package used for classification: equal keys iff the
// computed invariants coincide.
struct Fingerprint {
    long g = 0;
    Int d = 1, l2 = 1;
    std::vector<std::string> homology;
    std::string lambda1_value;       // lambda_1(1,1) or "-" when d = 1
    std::string lambda2_certificate; // canonical rendering of the hyperbolic blocks
    std::string key;                 // all of the above joined canonically
    bool operator==(const Fingerprint& other) const { return key == other.key; }
};
Fingerprint fingerprint(const JoinParams& p);

} // namespace joininv
