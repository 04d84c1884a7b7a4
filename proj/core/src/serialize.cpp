#include "joininv/serialize.hpp"

#include "joininv/presentations.hpp"

namespace joininv {

namespace {

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

json profile_strings(const CohomologyProfile& profile) {
    json arr = json::array();
    for (const FgAbGroup& g : profile.groups) arr.push_back(g.to_string());
    return arr;
}

} // namespace

json to_json(const JoinParams& p) {
    return json{
        {"g", p.g},           {"n", p.n},           {"w1", to_ll(p.w1)},
        {"w2", to_ll(p.w2)},  {"l1", to_ll(p.l1)},  {"l2", to_ll(p.l2)},
        {"r", to_ll(p.r)},    {"s", to_ll(p.s)},    {"u1", to_ll(p.u1)},
        {"u2", to_ll(p.u2)},  {"d", to_ll(p.d)},
    };
}

json to_json(const CohomologyProfile& profile) { return profile_strings(profile); }

json to_json(const LinkingForm& f) {
    json entries = json::array();
    for (const auto& row : f.matrix) {
        json r = json::array();
        for (const QzResidue& x : row) r.push_back(x.to_string());
        entries.push_back(r);
    }
    return json{
        {"group", f.torsion_group.to_string()},
        {"basis", f.basis},
        {"entries", entries},
        {"symmetry", f.expected_symmetry == LinkingForm::Symmetry::skew ? "skew" : "symmetric"},
    };
}

json to_json(const InvariantReport& report) {
    json checks = json::object();
    for (const auto& [name, ok] : report.checks) checks[name] = ok;
    json provenance = json::object();
    for (const auto& [k, v] : report.provenance) provenance[k] = v;
    return json{
        {"params", to_json(report.params)},
        {"h_integral", profile_strings(report.h_integral)},
        {"h_rational_betti", report.h_rational_betti},
        {"h_qz", profile_strings(report.h_qz)},
        {"homology", profile_strings(report.homology)},
        {"checks", checks},
        {"provenance", provenance},
    };
}

json full_report_json(const InvariantReport& report) {
    const JoinParams& p = report.params;
    json doc = json{{"schema", "join-invariants/1"}};
    json body = to_json(report);
    for (auto& [key, value] : body.items()) doc[key] = value;

    JoinPi1 pi1 = pi1_join(p);
    doc["pi1"] = json{{"raw", pi1.raw.to_string()}, {"reduced", pi1.reduced.to_string()}};

    DiscBundleEuler e1 = disc_bundle_euler(p, 1);
    DiscBundleEuler e2 = disc_bundle_euler(p, 2);
    doc["euler"] = json{
        {"circle_bundles", {to_ll(Int(p.n) * p.w1), to_ll(Int(p.n) * p.w2)}},
        {"disc_bundles",
         {json{{"element", to_ll(e1.torsion_component)},
               {"ambient", e1.ambient_torsion.to_string()},
               {"order", to_ll(e1.order)}},
          json{{"element", to_ll(e2.torsion_component)},
               {"ambient", e2.ambient_torsion.to_string()},
               {"order", to_ll(e2.order)}}}},
    };

    doc["linking"] = json{{"h2", to_json(linking_form_h2(p))},
                          {"h1h3", to_json(linking_form_h1h3(p))}};
    doc["fingerprint"] = fingerprint(p).key;
    return doc;
}

} // namespace joininv
