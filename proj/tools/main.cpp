// joininv: exact invariants of lens-space bundle joins over surfaces.
//
// Subcommands:
//   compute   one parameter tuple -> full invariant report
//   sweep     all admissible tuples in given ranges -> one record each
//   classify  group sweep tuples by invariant fingerprint
//   selftest  run every library consistency check over a bounded grid

#include "joininv/linking.hpp"
#include "joininv/mvengine.hpp"
#include "joininv/serialize.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace joininv;

struct Range {
    long lo = 1, hi = 1;
};

// Accepts "k" or "lo:hi".
Range parse_range(const std::string& text) {
    Range r;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stol(text);
    } else {
        r.lo = std::stol(text.substr(0, colon));
        r.hi = std::stol(text.substr(colon + 1));
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("range must be 'k' or 'lo:hi' with 1 <= lo <= hi");
    return r;
}

long igcd(long a, long b) { return b == 0 ? a : igcd(b, a % b); }

struct Tuple {
    long g, n, w1, w2, l2;
};

// Lexicographic enumeration of admissible tuples.
std::vector<Tuple> enumerate_admissible(const Range& g, const Range& n, const Range& w1,
                                        const Range& w2, const Range& l2) {
    std::vector<Tuple> out;
    for (long gg = g.lo; gg <= g.hi; ++gg)
        for (long nn = n.lo; nn <= n.hi; ++nn)
            for (long a = w1.lo; a <= w1.hi; ++a)
                for (long b = w2.lo; b <= w2.hi; ++b) {
                    if (igcd(a, b) != 1) continue;
                    for (long l = l2.lo; l <= l2.hi; ++l) {
                        if (igcd(l, a * b) != 1) continue;
                        out.push_back({gg, nn, a, b, l});
                    }
                }
    return out;
}

unsigned worker_count() {
    unsigned n = 1;
    if (const char* env = std::getenv("JOIN_INV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        n = v <= 0 ? std::thread::hardware_concurrency() : static_cast<unsigned>(v);
    }
    return std::max(1u, n);
}

// Evaluate f over tuples, possibly in parallel, preserving input order.
template <typename F>
auto map_tuples(const std::vector<Tuple>& tuples, F f)
    -> std::vector<decltype(f(std::declval<Tuple>()))> {
    using R = decltype(f(std::declval<Tuple>()));
    std::vector<R> results(tuples.size());
    unsigned workers = std::min<std::size_t>(worker_count(), tuples.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tuples.size(); ++i) results[i] = f(tuples[i]);
        return results;
    }
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < tuples.size(); i += workers) results[i] = f(tuples[i]);
        }));
    for (auto& fut : futures) fut.get();
    return results;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* kCsvHeader =
    "g,n,w1,w2,l2,r,s,d,h0,h1,h2,h3,h4,h5,b0,b1,b2,b3,b4,b5,fingerprint";

std::string report_csv_row(const InvariantReport& rep, const Fingerprint& fp) {
    const JoinParams& p = rep.params;
    std::ostringstream os;
    os << p.g << "," << p.n << "," << p.w1 << "," << p.w2 << "," << p.l2 << "," << p.r << ","
       << p.s << "," << p.d;
    for (const FgAbGroup& h : rep.h_integral.groups) os << "," << csv_quote(h.to_string());
    for (long b : rep.h_rational_betti) os << "," << b;
    os << "," << csv_quote(fp.key);
    return os.str();
}

std::string report_table(const InvariantReport& rep, const Fingerprint& fp) {
    const JoinParams& p = rep.params;
    std::ostringstream os;
    os << "tuple (g,n,w1,w2,l2) = (" << p.g << "," << p.n << "," << p.w1 << "," << p.w2 << ","
       << p.l2 << ")   r=" << p.r << " s=" << p.s << " d=" << p.d << "\n";
    JoinPi1 pi1 = pi1_join(p);
    os << "  pi1(M)     " << pi1.reduced.to_string() << "\n";
    for (int q = 0; q <= 5; ++q)
        os << "  H^" << q << "(M;Z)    " << rep.h_integral[q].to_string() << "\n";
    for (int q = 0; q <= 5; ++q)
        os << "  H^" << q << "(M;Q/Z)  " << rep.h_qz[q].to_string() << "\n";
    for (int q = 0; q <= 5; ++q)
        os << "  H_" << q << "(M;Z)    " << rep.homology[q].to_string() << "\n";
    os << "  betti      ";
    for (long b : rep.h_rational_betti) os << b << " ";
    os << "\n";
    LinkingForm l2f = linking_form_h2(p);
    LinkingForm l1f = linking_form_h1h3(p);
    os << "  lambda2    " << (l2f.matrix.empty() ? "-" : fp.lambda2_certificate) << "\n";
    os << "  lambda1    " << (l1f.matrix.empty() ? "-" : l1f.matrix[0][0].to_string())
       << (l1f.matrix.empty() ? "" : " on " + l1f.torsion_group.to_string()) << "\n";
    os << "  fingerprint " << fp.key << "\n";
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << text;
    }
}

int cmd_compute(long g, long n, long w1, long w2, long l2, const std::string& format,
                const std::string& out_path) {
    JoinParams p = JoinParams::validate(g, n, w1, w2, l2);
    InvariantReport rep = cross_validate(p);
    Fingerprint fp = fingerprint(p);
    std::string text;
    if (format == "json") {
        text = full_report_json(rep).dump(2) + "\n";
    } else if (format == "csv") {
        text = std::string(kCsvHeader) + "\n" + report_csv_row(rep, fp) + "\n";
    } else {
        text = report_table(rep, fp);
    }
    emit(text, out_path);
    return 0;
}

int cmd_sweep(const Range& g, const Range& n, const Range& w1, const Range& w2, const Range& l2,
              const std::string& format, const std::string& out_path) {
    std::vector<Tuple> tuples = enumerate_admissible(g, n, w1, w2, l2);
    auto rows = map_tuples(tuples, [&](const Tuple& t) {
        JoinParams p = JoinParams::validate(t.g, t.n, t.w1, t.w2, t.l2);
        InvariantReport rep = cross_validate(p);
        Fingerprint fp = fingerprint(p);
        if (format == "json") return full_report_json(rep).dump(2);
        if (format == "csv") return report_csv_row(rep, fp);
        return report_table(rep, fp);
    });
    std::ostringstream os;
    if (format == "json") {
        os << "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << (i ? ",\n" : "\n") << rows[i];
        os << (rows.empty() ? "]" : "\n]") << "\n";
    } else if (format == "csv") {
        os << kCsvHeader << "\n";
        for (const std::string& row : rows) os << row << "\n";
    } else {
        for (const std::string& row : rows) os << row << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_classify(const Range& g, const Range& n, const Range& w1, const Range& w2,
                 const Range& l2, const std::string& format, const std::string& out_path) {
    std::vector<Tuple> tuples = enumerate_admissible(g, n, w1, w2, l2);
    auto keys = map_tuples(tuples, [](const Tuple& t) {
        return fingerprint(JoinParams::validate(t.g, t.n, t.w1, t.w2, t.l2)).key;
    });
    // Group in first-seen (lexicographic tuple) order.
    std::vector<std::pair<std::string, std::vector<Tuple>>> groups;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& gr) { return gr.first == keys[i]; });
        if (it == groups.end())
            groups.push_back({keys[i], {tuples[i]}});
        else
            it->second.push_back(tuples[i]);
    }
    auto witness = [](const Tuple& t) {
        std::ostringstream os;
        os << "(" << t.g << "," << t.n << "," << t.w1 << "," << t.w2 << "," << t.l2 << ")";
        return os.str();
    };
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const auto& [key, members] : groups) {
            json wit = json::array();
            for (const Tuple& t : members) wit.push_back(witness(t));
            arr.push_back(json{{"fingerprint", key},
                               {"count", members.size()},
                               {"witnesses", wit}});
        }
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "fingerprint,count,witnesses\n";
        for (const auto& [key, members] : groups) {
            std::string wits;
            for (const Tuple& t : members) wits += (wits.empty() ? "" : " ") + witness(t);
            os << csv_quote(key) << "," << members.size() << "," << csv_quote(wits) << "\n";
        }
    } else {
        for (const auto& [key, members] : groups) {
            os << key << "\n  " << members.size() << " tuple(s):";
            for (const Tuple& t : members) os << " " << witness(t);
            os << "\n";
        }
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_selftest(long gmax, long nmax, long wmax, long l2max, bool inject_fault) {
    if (gmax == 0 || nmax == 0 || wmax == 0 || l2max == 0) {
        std::cout << "warning: empty grid, vacuous pass\n";
        return 0;
    }
    auto start = std::chrono::steady_clock::now();
    std::vector<Tuple> tuples =
        enumerate_admissible({1, gmax}, {1, nmax}, {1, wmax}, {1, wmax}, {1, l2max});
    long checks = 0, failures = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const Tuple& t = tuples[i];
        JoinParams p = JoinParams::validate(t.g, t.n, t.w1, t.w2, t.l2);
        try {
            FaultInjection fault;
            fault.tamper_closed_form_d = inject_fault && i == 0;
            InvariantReport rep = cross_validate(p, fault);
            checks += static_cast<long>(rep.checks.size());
            LinkingForm l2f = linking_form_h2(p);
            LinkingForm l1f = linking_form_h1h3(p);
            auto expect = [&](bool ok, const char* what) {
                ++checks;
                if (!ok) throw ValidationFailure(what);
            };
            expect(check_symmetry(l2f, 2, 5), "lambda2 skew-symmetric");
            expect(check_symmetry(l1f, 1, 5), "lambda1 symmetric");
            expect(is_nondegenerate(l2f), "lambda2 nondegenerate");
            expect(is_nondegenerate(l1f), "lambda1 nondegenerate");
        } catch (const ValidationFailure& e) {
            ++failures;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << "tuples:   " << tuples.size() << "\n"
              << "checks:   " << checks << "\n"
              << "failures: " << failures << "\n"
              << "time:     " << elapsed / 1000.0 << " s\n";
    if (failures) {
        std::cout << "first failed assertion: " << first_failure << "\n";
        return 2;
    }
    std::cout << "selftest passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebraic invariants of lens-space bundle joins over surfaces"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;

    long g = 1, n = 1, w1 = 1, w2 = 1, l2 = 1;
    auto* compute = app.add_subcommand("compute", "Invariant report for one parameter tuple");
    compute->add_option("--g", g, "genus (>= 1)")->required();
    compute->add_option("--n", n, "Euler parameter n (>= 1)")->required();
    compute->add_option("--w1", w1, "weight w1 (>= 1, coprime to w2)")->required();
    compute->add_option("--w2", w2, "weight w2 (>= 1, coprime to w1)")->required();
    compute->add_option("--l2", l2, "order l2 (>= 1, coprime to w1*w2)")->required();

    std::string gr = "1", nr = "1:3", w1r = "1:3", w2r = "1:3", l2r = "1:3";
    auto add_ranges = [&](CLI::App* cmd) {
        cmd->add_option("--g", gr, "genus range, 'k' or 'lo:hi'");
        cmd->add_option("--n", nr, "n range");
        cmd->add_option("--w1", w1r, "w1 range");
        cmd->add_option("--w2", w2r, "w2 range");
        cmd->add_option("--l2", l2r, "l2 range");
    };
    auto* sweep = app.add_subcommand(
        "sweep", std::string("Reports for every admissible tuple in the ranges; csv columns: ") +
                     kCsvHeader);
    add_ranges(sweep);
    auto* classify =
        app.add_subcommand("classify", "Group admissible tuples by invariant fingerprint");
    add_ranges(classify);

    long gmax = 2, nmax = 4, wmax = 3, l2max = 4;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "Run all consistency checks over a grid");
    selftest->add_option("--gmax", gmax, "max genus (0 = empty grid)");
    selftest->add_option("--nmax", nmax, "max n");
    selftest->add_option("--wmax", wmax, "max weight");
    selftest->add_option("--l2max", l2max, "max l2");
    selftest->add_flag("--inject-fault", inject_fault)->group("");  // hidden test hook

    for (CLI::App* cmd : {compute, sweep, classify}) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(g, n, w1, w2, l2, format, out_path);
        if (sweep->parsed())
            return cmd_sweep(parse_range(gr), parse_range(nr), parse_range(w1r),
                             parse_range(w2r), parse_range(l2r), format, out_path);
        if (classify->parsed())
            return cmd_classify(parse_range(gr), parse_range(nr), parse_range(w1r),
                                parse_range(w2r), parse_range(l2r), format, out_path);
        if (selftest->parsed()) return cmd_selftest(gmax, nmax, wmax, l2max, inject_fault);
    } catch (const GcdViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const RangeViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationFailure& e) {
        std::cerr << "internal validation failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
