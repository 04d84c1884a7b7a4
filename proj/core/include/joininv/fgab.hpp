#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace joininv {

using Int = boost::multiprecision::cpp_int;

// Finitely generated abelian group in invariant-factor normal form:
//   Z^rank  +  (Q/Z)^divisible_rank  +  Z/d1 + ... + Z/dk
// with every d >= 2 and d1 | d2 | ... | dk.  The divisible summand only
// shows up in Q/Z-coefficient computations; ordinary groups keep it zero.
class FgAbGroup {
public:
    FgAbGroup() = default;

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free(long rank);
    static FgAbGroup cyclic(const Int& order);   // order 0 means Z, order 1 trivial
    static FgAbGroup divisible(long copies);     // (Q/Z)^copies
    // Build from an arbitrary factor list (entries may be 0, 1 or unordered);
    // zeros add to the free rank, the rest is merged into invariant factors.
    static FgAbGroup from_factors(long rank, std::vector<Int> factors);

    long rank() const { return rank_; }
    long divisible_rank() const { return divisible_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const;
    bool is_finite() const { return rank_ == 0 && divisible_rank_ == 0; }
    Int torsion_order() const;               // product of invariant factors
    Int exponent() const;                    // largest invariant factor (1 if none)
    FgAbGroup torsion() const;

    FgAbGroup direct_sum(const FgAbGroup& other) const;
    FgAbGroup hom_to_qz() const;             // Hom(-, Q/Z)
    FgAbGroup ext_to_z() const;              // Ext^1(-, Z)

    // Canonical rendering, e.g. "Z^2 + Z/2 + Z/4", "(Q/Z)^2 + Z/2", "0".
    std::string to_string() const;

    bool operator==(const FgAbGroup&) const = default;

private:
    long rank_ = 0;
    long divisible_rank_ = 0;
    std::vector<Int> factors_;
};

} // namespace joininv
