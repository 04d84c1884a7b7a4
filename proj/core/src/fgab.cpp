#include "joininv/fgab.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace joininv {

namespace {

// Trial-division factorization; torsion orders in this library stay small
// (products of the input parameters), so nothing fancier is needed.
std::map<Int, int> factorize(Int n) {
    std::map<Int, int> out;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

Int ipow(const Int& base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Merge a multiset of cyclic orders into the invariant-factor chain via
// prime-power buckets: the k-th largest invariant factor collects the
// k-th largest prime power of every prime.
std::vector<Int> merge_invariant_factors(const std::vector<Int>& orders) {
    std::map<Int, std::vector<int>> buckets;
    std::size_t slots = 0;
    for (const Int& m : orders) {
        if (m <= 1) continue;
        for (const auto& [p, e] : factorize(m)) buckets[p].push_back(e);
    }
    for (auto& [p, es] : buckets) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        slots = std::max(slots, es.size());
    }
    std::vector<Int> chain(slots, Int(1)); // chain[0] = largest factor
    for (const auto& [p, es] : buckets)
        for (std::size_t k = 0; k < es.size(); ++k)
            chain[k] *= ipow(p, es[k]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

void append_power(std::ostream& os, const std::string& base, long k, bool& first) {
    if (k <= 0) return;
    if (!first) os << " + ";
    first = false;
    os << base;
    if (k > 1) os << "^" << k;
}

} // namespace

FgAbGroup FgAbGroup::free(long rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    FgAbGroup g;
    g.rank_ = rank;
    return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
    if (order < 0) throw std::invalid_argument("negative cyclic order");
    FgAbGroup g;
    if (order == 0)
        g.rank_ = 1;
    else if (order > 1)
        g.factors_.push_back(order);
    return g;
}

FgAbGroup FgAbGroup::divisible(long copies) {
    if (copies < 0) throw std::invalid_argument("negative divisible rank");
    FgAbGroup g;
    g.divisible_rank_ = copies;
    return g;
}

FgAbGroup FgAbGroup::from_factors(long rank, std::vector<Int> factors) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    FgAbGroup g;
    g.rank_ = rank;
    std::vector<Int> torsion;
    for (Int& f : factors) {
        if (f < 0) f = -f;
        if (f == 0)
            ++g.rank_;
        else if (f > 1)
            torsion.push_back(f);
    }
    // Already a valid chain?  Keep it; otherwise merge.
    bool chained = true;
    for (std::size_t i = 0; i + 1 < torsion.size(); ++i)
        if (torsion[i + 1] % torsion[i] != 0) { chained = false; break; }
    g.factors_ = chained ? torsion : merge_invariant_factors(torsion);
    return g;
}

bool FgAbGroup::is_trivial() const {
    return rank_ == 0 && divisible_rank_ == 0 && factors_.empty();
}

Int FgAbGroup::torsion_order() const {
    Int r = 1;
    for (const Int& f : factors_) r *= f;
    return r;
}

Int FgAbGroup::exponent() const {
    return factors_.empty() ? Int(1) : factors_.back();
}

FgAbGroup FgAbGroup::torsion() const {
    FgAbGroup g;
    g.factors_ = factors_;
    return g;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
    FgAbGroup g;
    g.rank_ = rank_ + other.rank_;
    g.divisible_rank_ = divisible_rank_ + other.divisible_rank_;
    std::vector<Int> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    g.factors_ = merge_invariant_factors(all);
    return g;
}

FgAbGroup FgAbGroup::hom_to_qz() const {
    // Hom(Z, Q/Z) = Q/Z, Hom(Z/d, Q/Z) = Z/d, Hom(Q/Z, Q/Z) is not needed here.
    if (divisible_rank_ != 0)
        throw std::invalid_argument("hom_to_qz: source already has divisible part");
    FgAbGroup g;
    g.divisible_rank_ = rank_;
    g.factors_ = factors_;
    return g;
}

FgAbGroup FgAbGroup::ext_to_z() const {
    // Ext(Z^r + T, Z) = T for finitely generated groups.
    if (divisible_rank_ != 0)
        throw std::invalid_argument("ext_to_z: source has divisible part");
    return torsion();
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    append_power(os, "Z", rank_, first);
    append_power(os, "(Q/Z)", divisible_rank_, first);
    // Group equal torsion factors into powers; ascending order is already given.
    std::size_t i = 0;
    while (i < factors_.size()) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        long k = static_cast<long>(j - i);
        std::string base = "Z/" + factors_[i].str();
        if (k > 1) base = "(" + base + ")";
        append_power(os, base, k, first);
        i = j;
    }
    std::string s = os.str();
    // Cosmetics: a single Q/Z copy reads better without parentheses.
    if (divisible_rank_ == 1) {
        auto pos = s.find("(Q/Z)");
        if (pos != std::string::npos && (pos + 5 == s.size() || s[pos + 5] != '^'))
            s = s.substr(0, pos) + "Q/Z" + s.substr(pos + 5);
    }
    return s;
}

} // namespace joininv
