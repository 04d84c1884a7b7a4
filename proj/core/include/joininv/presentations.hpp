#pragma once

#include "joininv/zmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace joininv {

struct BadGenus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Freely reduced word in named generators: a sequence of (generator, exponent)
// syllables with nonzero exponents and no equal adjacent generators.
class Word {
public:
    Word() = default;
    static Word identity() { return Word(); }
    static Word generator(const std::string& name, const Int& exp = 1);

    Word& append(const std::string& name, const Int& exp);
    Word operator*(const Word& other) const;
    Word inverse() const;
    static Word commutator(const Word& x, const Word& y);

    bool is_identity() const { return syllables_.empty(); }
    const std::vector<std::pair<std::string, Int>>& syllables() const { return syllables_; }

    // Total exponent of one generator (abelianized image coordinate).
    Int exponent_sum(const std::string& name) const;

    std::string to_string() const;
    bool operator==(const Word&) const = default;

private:
    std::vector<std::pair<std::string, Int>> syllables_;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    // Generators known to be central (commute with everything); used when
    // comparing words modulo centrality.
    std::vector<std::string> central;

    bool is_central(const std::string& name) const;
    std::size_t generator_index(const std::string& name) const;
    std::string to_string() const;
};

// Homomorphism determined by generator images; unmapped generators are illegal.
struct GroupHom {
    Presentation source;
    Presentation target;
    std::map<std::string, Word> images;

    Word apply(const Word& w) const;
};

// Abelianization: cokernel of the exponent-sum matrix (generators x relators).
FgAbGroup abelianize(const Presentation& p);
IntMatrix relation_matrix(const Presentation& p);

// pi_1 of an oriented circle bundle over a genus-g surface with Euler number e:
// <a_i, b_i, c | [a_i, c], [b_i, c], prod [a_i,b_i] c^e>.
Presentation pi1_circle_bundle(long genus, const Int& euler, const std::string& fiber_name = "c");

struct JoinParams; // blocks.hpp

// Presentations of the two blocks and their intersection region.
struct BlockPresentations {
    Presentation block1;        // <a_i, b_i, c1 | [a_i,c1], [b_i,c1], prod[a_i,b_i] c1^{n w1}>
    Presentation block2;        // same with c2 and n w2
    Presentation intersection;  // <a_i, b_i, m1, m2 | commutators, prod[a_i,b_i] m1^{n w1} m2^{n r w2}>
};
BlockPresentations pi1_blocks(const JoinParams& p);

// pi_1 of the join: the raw two-fiber-generator form and the reduced
// single-generator form obtained by eliminating c1.
struct JoinPi1 {
    Presentation raw;      // generators a_i, b_i, c1, c2
    Presentation reduced;  // generators a_i, b_i, c2
};
JoinPi1 pi1_join(const JoinParams& p);

// The two van Kampen edge maps from the intersection into the blocks.
struct SvkMaps {
    GroupHom into_block1;  // m1 -> c1, m2 -> e
    GroupHom into_block2;  // m1 -> c2^{-s w2^2}, m2 -> c2^{l2}
};
SvkMaps svk_maps(const JoinParams& p);

// Check that each edge map sends the main intersection relator to the
// corresponding block relator, comparing the non-central letter sequence
// exactly and the central exponents arithmetically.
struct RelatorCheck {
    bool ok = true;
    std::string detail;
};
RelatorCheck verify_relator_compatibility(const JoinParams& p);
RelatorCheck verify_relator_compatibility(const SvkMaps& maps, const Word& main_relator,
                                          const Word& relator1, const Word& relator2);

} // namespace joininv
