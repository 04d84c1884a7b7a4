#include "joininv/presentations.hpp"

#include "joininv/blocks.hpp"

#include <algorithm>
#include <sstream>

namespace joininv {

Word Word::generator(const std::string& name, const Int& exp) {
    Word w;
    w.append(name, exp);
    return w;
}

Word& Word::append(const std::string& name, const Int& exp) {
    if (exp == 0) return *this;
    if (!syllables_.empty() && syllables_.back().first == name) {
        syllables_.back().second += exp;
        if (syllables_.back().second == 0) syllables_.pop_back();
    } else {
        syllables_.emplace_back(name, exp);
    }
    return *this;
}

Word Word::operator*(const Word& other) const {
    Word w = *this;
    for (const auto& [name, exp] : other.syllables_) w.append(name, exp);
    return w;
}

Word Word::inverse() const {
    Word w;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.append(it->first, -it->second);
    return w;
}

Word Word::commutator(const Word& x, const Word& y) {
    return x * y * x.inverse() * y.inverse();
}

Int Word::exponent_sum(const std::string& name) const {
    Int total = 0;
    for (const auto& [g, e] : syllables_)
        if (g == name) total += e;
    return total;
}

std::string Word::to_string() const {
    if (syllables_.empty()) return "e";
    std::ostringstream os;
    for (const auto& [g, e] : syllables_) {
        os << g;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

bool Presentation::is_central(const std::string& name) const {
    return std::find(central.begin(), central.end(), name) != central.end();
}

std::size_t Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end())
        throw std::invalid_argument("unknown generator: " + name);
    return static_cast<std::size_t>(it - generators.begin());
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? ", " : "") << generators[i];
    os << " | ";
    for (std::size_t i = 0; i < relators.size(); ++i)
        os << (i ? ", " : "") << relators[i].to_string();
    os << ">";
    return os.str();
}

Word GroupHom::apply(const Word& w) const {
    Word out;
    for (const auto& [g, e] : w.syllables()) {
        auto it = images.find(g);
        if (it == images.end())
            throw std::invalid_argument("GroupHom: no image for generator " + g);
        const Word& img = it->second;
        if (img.syllables().size() == 1) {
            // power of a single letter: scale the exponent directly
            out.append(img.syllables()[0].first, img.syllables()[0].second * e);
        } else if (e >= 0) {
            for (Int k = 0; k < e; ++k) out = out * img;
        } else {
            Word inv = img.inverse();
            for (Int k = 0; k > e; --k) out = out * inv;
        }
    }
    return out;
}

IntMatrix relation_matrix(const Presentation& p) {
    IntMatrix m(p.generators.size(), p.relators.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            m.at(i, j) = p.relators[j].exponent_sum(p.generators[i]);
    return m;
}

FgAbGroup abelianize(const Presentation& p) {
    return cokernel(relation_matrix(p));
}

namespace {

std::vector<std::string> surface_generators(long genus) {
    std::vector<std::string> gens;
    for (long i = 1; i <= genus; ++i) {
        gens.push_back("a" + std::to_string(i));
        gens.push_back("b" + std::to_string(i));
    }
    return gens;
}

Word surface_relator(long genus) {
    Word w;
    for (long i = 1; i <= genus; ++i)
        w = w * Word::commutator(Word::generator("a" + std::to_string(i)),
                                 Word::generator("b" + std::to_string(i)));
    return w;
}

// Commutator relators of every surface generator with each central generator.
void add_centrality_relators(Presentation& p, long genus,
                             const std::vector<std::string>& centrals) {
    for (const std::string& c : centrals)
        for (long i = 1; i <= genus; ++i) {
            p.relators.push_back(Word::commutator(
                Word::generator("a" + std::to_string(i)), Word::generator(c)));
            p.relators.push_back(Word::commutator(
                Word::generator("b" + std::to_string(i)), Word::generator(c)));
        }
}

} // namespace

Presentation pi1_circle_bundle(long genus, const Int& euler, const std::string& fiber_name) {
    if (genus < 1) throw BadGenus("pi1_circle_bundle: genus must be >= 1");
    Presentation p;
    p.generators = surface_generators(genus);
    p.generators.push_back(fiber_name);
    p.central = {fiber_name};
    add_centrality_relators(p, genus, p.central);
    p.relators.push_back(surface_relator(genus) * Word::generator(fiber_name, euler));
    return p;
}

BlockPresentations pi1_blocks(const JoinParams& p) {
    BlockPresentations out;
    out.block1 = pi1_circle_bundle(p.g, Int(p.n) * p.w1, "c1");
    out.block2 = pi1_circle_bundle(p.g, Int(p.n) * p.w2, "c2");

    Presentation& b12 = out.intersection;
    b12.generators = surface_generators(p.g);
    b12.generators.push_back("m1");
    b12.generators.push_back("m2");
    b12.central = {"m1", "m2"};
    add_centrality_relators(b12, p.g, b12.central);
    b12.relators.push_back(
        Word::commutator(Word::generator("m1"), Word::generator("m2")));
    b12.relators.push_back(surface_relator(p.g) *
                           Word::generator("m1", Int(p.n) * p.w1) *
                           Word::generator("m2", Int(p.n) * p.r * p.w2));
    return out;
}

JoinPi1 pi1_join(const JoinParams& p) {
    JoinPi1 out;

    Presentation& raw = out.raw;
    raw.generators = surface_generators(p.g);
    raw.generators.push_back("c1");
    raw.generators.push_back("c2");
    raw.central = {"c1", "c2"};
    add_centrality_relators(raw, p.g, raw.central);
    raw.relators.push_back(surface_relator(p.g) *
                           Word::generator("c2", Int(p.n) * p.w2));
    raw.relators.push_back(Word::generator("c1") *
                           Word::generator("c2", p.s * p.w2 * p.w2));
    raw.relators.push_back(Word::generator("c2", p.l2));

    Presentation& red = out.reduced;
    red.generators = surface_generators(p.g);
    red.generators.push_back("c2");
    red.central = {"c2"};
    add_centrality_relators(red, p.g, red.central);
    red.relators.push_back(surface_relator(p.g) *
                           Word::generator("c2", Int(p.n) * p.w2));
    red.relators.push_back(Word::generator("c2", p.l2));
    return out;
}

SvkMaps svk_maps(const JoinParams& p) {
    BlockPresentations blocks = pi1_blocks(p);
    SvkMaps maps;

    GroupHom& h1 = maps.into_block1;
    h1.source = blocks.intersection;
    h1.target = blocks.block1;
    for (long i = 1; i <= p.g; ++i) {
        h1.images["a" + std::to_string(i)] = Word::generator("a" + std::to_string(i));
        h1.images["b" + std::to_string(i)] = Word::generator("b" + std::to_string(i));
    }
    h1.images["m1"] = Word::generator("c1");
    h1.images["m2"] = Word::identity();

    GroupHom& h2 = maps.into_block2;
    h2.source = blocks.intersection;
    h2.target = blocks.block2;
    for (long i = 1; i <= p.g; ++i) {
        h2.images["a" + std::to_string(i)] = Word::generator("a" + std::to_string(i));
        h2.images["b" + std::to_string(i)] = Word::generator("b" + std::to_string(i));
    }
    h2.images["m1"] = Word::generator("c2", -p.s * p.w2 * p.w2);
    h2.images["m2"] = Word::generator("c2", p.l2);
    return maps;
}

namespace {

// Split a word into its sequence of non-central syllables plus the exponent
// sums of the central generators; legal because centrals commute with all.
struct CentralSplit {
    std::vector<std::pair<std::string, Int>> noncentral;
    std::map<std::string, Int> central;
};

CentralSplit split_by_centrality(const Word& w, const Presentation& p) {
    CentralSplit out;
    for (const auto& [g, e] : w.syllables()) {
        if (p.is_central(g))
            out.central[g] += e;
        else if (!out.noncentral.empty() && out.noncentral.back().first == g) {
            out.noncentral.back().second += e;
            if (out.noncentral.back().second == 0) out.noncentral.pop_back();
        } else {
            out.noncentral.emplace_back(g, e);
        }
    }
    std::erase_if(out.central, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool relator_matches(const GroupHom& hom, const Word& main_relator,
                     const Word& target_relator, std::string& why) {
    Word image = hom.apply(main_relator);
    CentralSplit got = split_by_centrality(image, hom.target);
    CentralSplit want = split_by_centrality(target_relator, hom.target);
    if (got.noncentral != want.noncentral) {
        why = "non-central letter sequences differ: image " + image.to_string() +
              " vs relator " + target_relator.to_string();
        return false;
    }
    if (got.central != want.central) {
        why = "central exponents differ: image " + image.to_string() +
              " vs relator " + target_relator.to_string();
        return false;
    }
    return true;
}

} // namespace

RelatorCheck verify_relator_compatibility(const SvkMaps& maps, const Word& main_relator,
                                          const Word& relator1, const Word& relator2) {
    RelatorCheck out;
    std::string why;
    if (!relator_matches(maps.into_block1, main_relator, relator1, why)) {
        out.ok = false;
        out.detail = "map into B1: " + why;
        return out;
    }
    if (!relator_matches(maps.into_block2, main_relator, relator2, why)) {
        out.ok = false;
        out.detail = "map into B2: " + why;
        return out;
    }
    out.detail = "main relator maps to both block relators";
    return out;
}

RelatorCheck verify_relator_compatibility(const JoinParams& p) {
    BlockPresentations blocks = pi1_blocks(p);
    return verify_relator_compatibility(svk_maps(p),
                                        blocks.intersection.relators.back(),
                                        blocks.block1.relators.back(),
                                        blocks.block2.relators.back());
}

} // namespace joininv
