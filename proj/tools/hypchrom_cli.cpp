#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypchrom/analysis.hpp"
#include "hypchrom/chromatic.hpp"
#include "hypchrom/constructions.hpp"
#include "hypchrom/independence.hpp"
#include "hypchrom/orientations.hpp"
#include "hypchrom/parse_error.hpp"
#include "hypchrom/sturm.hpp"
#include "hypchrom/sweeps.hpp"
#include "hypchrom/tutte.hpp"

using namespace hypchrom;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Record {
    std::string text;
    json result;
};

struct Outcome {
    std::vector<Record> records;
    std::string digest;
    int exit_code = 0;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return "sha256:" + os.str();
}

// ---- input ----------------------------------------------------------------

enum class Kind { hypergraph, multigraph, polynomial };

struct Input {
    std::string text;
    Kind kind = Kind::hypergraph;
};

std::string fixture_text(const std::string& name) {
    if (name == "figure1b") return format_hypergraph(figure1b());
    if (name == "theorem3") return format_hypergraph(theorem3_instance());
    if (name == "k3") return format_multigraph(complete_graph(3).to_multigraph());
    if (name == "double-edge") return format_multigraph(double_edge());
    throw UsageError("unknown fixture '" + name + "' (figure1b, theorem3, k3, double-edge)");
}

Input load_input(const std::string& source) {
    Input in;
    if (source.rfind("fixture:", 0) == 0) {
        in.text = fixture_text(source.substr(8));
    } else if (source == "-") {
        in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(source, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + source + "'");
        in.text.assign(std::istreambuf_iterator<char>(f), {});
    }
    std::istringstream lines(in.text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        std::istringstream toks(line);
        std::string first, second;
        toks >> first >> second;
        if (first.empty() || first == "c") continue;
        if (first == "p" && second == "hg") return in.kind = Kind::hypergraph, in;
        if (first == "p" && second == "mg") return in.kind = Kind::multigraph, in;
        if (first == "poly") return in.kind = Kind::polynomial, in;
        throw ParseError(number, line.find_first_not_of(" \t") + 1, "expected 'p hg', 'p mg' or 'poly' header");
    }
    throw ParseError(number + 1, 1, "empty input");
}

Hypergraph as_hg(const Input& in) {
    switch (in.kind) {
        case Kind::hypergraph: return parse_hypergraph(in.text);
        case Kind::multigraph: return as_hypergraph(parse_multigraph(in.text));
        default: throw UsageError("this command needs a 'p hg' or 'p mg' input");
    }
}

Multigraph as_mg(const Input& in) {
    if (in.kind != Kind::multigraph) throw UsageError("this command needs a 'p mg' input");
    return parse_multigraph(in.text);
}

SimpleGraph as_simple(const Input& in) {
    try {
        return SimpleGraph::from_multigraph(as_mg(in));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("input is not a simple graph: ") + e.what());
    }
}

// ---- helpers --------------------------------------------------------------

std::string linear_factor(int c) {
    if (c == 0) return "x";
    return c > 0 ? "(x-" + std::to_string(c) + ")" : "(x+" + std::to_string(-c) + ")";
}

Record factored(const IntPolynomial& p) {
    if (p.is_zero()) return {"factored 0", json{{"factors", json::array()}, {"cofactor", "poly -1"}}};
    IntPolynomial rest = p;
    std::string text = "factored";
    json factors = json::array();
    for (int c = -2; c <= 2; ++c) {
        const unsigned k = root_multiplicity(rest, Integer(c));
        if (k == 0) continue;
        rest = divide_exact(rest, pow(IntPolynomial::linear(Integer(c)), k));
        text += " " + linear_factor(c) + "^" + std::to_string(k);
        factors.push_back({{"root", c}, {"multiplicity", k}});
    }
    text += " * (" + rest.to_string() + ")";
    return {text, json{{"factors", factors}, {"cofactor", format_poly(rest)}}};
}

Record poly_record(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {format_poly(p), json{{"poly", format_poly(p)}, {"coefficients", coeffs}}};
}

Record check_record(const CheckResult& c) {
    return {format_check(c), json{{"status", c.ok ? "ok" : "FAIL"}, {"id", c.id}, {"detail", c.detail}}};
}

void add_report(Outcome& out, const Report& r) {
    for (const auto& c : r) {
        out.records.push_back(check_record(c));
        if (!c.ok) out.exit_code = 1;
    }
}

void add_lines(Outcome& out, const std::string& block, const std::string& key) {
    std::istringstream is(block);
    std::string line;
    while (std::getline(is, line)) out.records.push_back({line, json{{key, line}}});
}

// ---- commands -------------------------------------------------------------

Outcome run_chrom(const Input& in, const std::string& algo, unsigned level_vertex, bool check_all) {
    const Hypergraph h = as_hg(in);
    Outcome out;
    IntPolynomial p;
    if (algo == "dc") {
        p = chrom_poly(h);
    } else if (algo == "interp") {
        p = chrom_interpolate(h);
    } else if (algo == "partition") {
        p = chrom_partition(h);
    } else {
        p = chrom_level(h, level_vertex);
    }
    out.records.push_back(poly_record(p));
    out.records.push_back(factored(p));
    if (check_all) {
        std::vector<std::pair<std::string, IntPolynomial>> results{{"dc", chrom_poly(h)}};
        if (h.order() <= 7) results.emplace_back("interp", chrom_interpolate(h));
        if (h.order() <= 10) results.emplace_back("partition", chrom_partition(h));
        if (h.order() > 0) results.emplace_back("level", chrom_level(h, level_vertex));
        if (h.size() <= 20) results.emplace_back("whitney", whitney_coeffs(h));
        CheckResult c{"chromatic-oracles", true, ""};
        for (const auto& [name, q] : results) {
            c.ok = c.ok && q == results.front().second;
            c.detail += (c.detail.empty() ? "" : " ") + name + "=[" + format_poly(q) + "]";
        }
        add_report(out, {c});
    }
    return out;
}

Outcome run_tutte(const Input& in, const std::string& algo) {
    const Multigraph g = as_mg(in);
    const BivarLaurent t = algo == "subset" ? tutte_subset(g) : tutte_dc(g);
    Outcome out;
    add_lines(out, format_bivar(t), "term");
    return out;
}

Outcome run_indep(const Input& in) {
    Outcome out;
    out.records.push_back(poly_record(independence_poly(as_simple(in))));
    return out;
}

Outcome run_orient(const Input& in) {
    const Multigraph g = as_mg(in);
    const Integer acyclic = count_acyclic(g);
    const Integer cyclic = count_totally_cyclic(g);
    const BivarLaurent t = tutte_dc(g);
    const Rational t20 = tutte_eval(t, 2, 0);
    const Rational t02 = tutte_eval(t, 0, 2);
    Outcome out;
    const std::string text = "acyclic " + acyclic.get_str() + " totally-cyclic " + cyclic.get_str() +
                             " T(2,0)=" + t20.get_str() + " T(0,2)=" + t02.get_str();
    out.records.push_back({text, json{{"acyclic", acyclic.get_str()},
                                      {"totally-cyclic", cyclic.get_str()},
                                      {"T(2,0)", t20.get_str()},
                                      {"T(0,2)", t02.get_str()}}});
    if (Rational(acyclic) != t20 || Rational(cyclic) != t02) out.exit_code = 1;
    return out;
}

Outcome run_roots(const Input& in, unsigned bits) {
    const IntPolynomial p = in.kind == Kind::polynomial ? parse_poly(in.text) : chrom_poly(as_hg(in));
    Outcome out;
    out.records.push_back(poly_record(p));
    if (p.is_zero()) throw UsageError("the zero polynomial has no isolated roots");
    unsigned real = 0;
    for (const auto& r : sturm_real_roots(p, bits)) {
        real += r.multiplicity;
        std::string text = r.is_exact() ? "root " + r.lo.get_str()
                                        : "root [" + r.lo.get_str() + ", " + r.hi.get_str() + "]";
        text += " multiplicity " + std::to_string(r.multiplicity);
        out.records.push_back({text, json{{"lo", r.lo.get_str()},
                                          {"hi", r.hi.get_str()},
                                          {"exact", r.is_exact()},
                                          {"multiplicity", r.multiplicity}}});
    }
    out.records.push_back({"real " + std::to_string(real) + " degree " + std::to_string(p.degree()),
                           json{{"real", real}, {"degree", p.degree()}}});
    return out;
}

Outcome run_construct(const std::string& kind, const Input& in, unsigned s, unsigned t, unsigned p) {
    Hypergraph h;
    if (kind == "apex") {
        h = h_apex(as_simple(in));
    } else if (kind == "edge") {
        h = h_edge(as_mg(in));
    } else if (kind == "plus-k1") {
        h = plus_k1(as_hg(in));
    } else if (kind == "family") {
        h = family_st(s, t);
    } else if (kind == "complete") {
        h = complete_hypergraph(p);
    } else {
        h = as_hg(in);
    }
    Outcome out;
    add_lines(out, format_hypergraph(h), "line");
    return out;
}

Outcome run_coeffs(const Input& in) {
    const Hypergraph h = as_hg(in);
    Outcome out;
    out.records.push_back(poly_record(whitney_coeffs(h)));
    const CoefficientPattern cp = coefficient_pattern(h);
    const auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
    out.records.push_back({"gap " + yes(cp.gap_holds) + " alternating " + yes(cp.alternating) + " log-concave " +
                               yes(cp.log_concave),
                           json{{"gap", cp.gap_holds}, {"alternating", cp.alternating}, {"log-concave", cp.log_concave}}});
    add_report(out, cp.assertions());
    return out;
}

Report verify_instance(const std::string& which, const Input& in) {
    Report r;
    if (which == "thm1") return verify_thm1(as_simple(in));
    if (which == "thm2") return verify_thm2(as_mg(in));
    if (which == "cor2") return verify_cor2(as_mg(in));
    if (which == "thm3") {
        const Hypergraph h = as_hg(in);
        const LambdaSquaredCheck c = lambda_sq_check(h);
        r.push_back({"lambda-squared-factor", !c.violated(),
                     describe(h) + " hypothesis=" + std::to_string(c.hypothesis_holds) +
                         " divisible=" + std::to_string(c.divisible)});
        return r;
    }
    if (which == "thm4") {
        const Hypergraph h = as_hg(in);
        std::vector<Separation> seps;
        for (unsigned w = 0; w < h.order(); ++w) {
            auto s = separations(h, w);
            seps.insert(seps.end(), s.begin(), s.end());
        }
        const bool has_common = h.size() > 0 && !common_vertices(h).empty();
        if (has_common || seps.empty()) {
            const FactorDecision d = lambda_minus1_sq_decide(h, std::nullopt);
            r.push_back({"lambda-minus-one-squared", d.predicted == d.actual,
                         describe(h) + " rule=" + d.rule + " predicted=" + std::to_string(d.predicted) +
                             " actual=" + std::to_string(d.actual)});
        } else {
            for (const auto& s : seps) {
                const FactorDecision d = lambda_minus1_sq_decide(h, s);
                r.push_back({"lambda-minus-one-squared", d.predicted == d.actual,
                             describe(h) + " w=" + std::to_string(s.w) + " V1=" + s.side1.to_string() +
                                 " rule=" + d.rule + " predicted=" + std::to_string(d.predicted) +
                                 " actual=" + std::to_string(d.actual)});
            }
        }
        for (const auto& s : seps) {
            const SeparationSums sums = main4_sums(h, s);
            r.push_back({"separation-sums", sums.consistent(),
                         describe(h) + " w=" + std::to_string(s.w) + " V1=" + s.side1.to_string() + " all=[" +
                             format_poly(sums.all) + "] connected=[" + format_poly(sums.connected) + "]"});
        }
        return r;
    }
    if (which == "recursions") {
        if (in.kind == Kind::multigraph) {
            const Multigraph g = as_mg(in);
            if (g.size() == 0) r = verify_per_edge_cases(g, std::nullopt);
            for (std::size_t e = 0; e < g.size(); ++e) {
                for (const auto& c : verify_per_edge_cases(g, e)) r.push_back(c);
                r.push_back(verify_per_edge_recursion(g, e));
            }
            bool simple = true;
            try {
                (void)SimpleGraph::from_multigraph(g);
            } catch (const std::invalid_argument&) {
                simple = false;
            }
            if (simple) {
                const SimpleGraph sg = SimpleGraph::from_multigraph(g);
                for (unsigned v = 0; v < sg.order(); ++v) r.push_back(verify_apex_vertex_recursion(sg, v));
            }
        }
        const Hypergraph h = as_hg(in);
        r.push_back(verify_plus_k1(h));
        for (unsigned u = 0; u < h.order(); ++u) {
            for (unsigned v = u + 1; v < h.order(); ++v) r.push_back(verify_addition_identification(h, VertexSet{u, v}));
        }
        return r;
    }
    if (which == "patterns") return coefficient_pattern(as_hg(in)).assertions();
    throw UsageError("unknown verifier '" + which + "'");
}

Report verify_sweep(const std::string& which, std::uint64_t seed) {
    if (which == "thm1") {
        Report r = sweep_apex_identity(seed);
        for (const auto& c : sweep_apex_roots(seed)) r.push_back(c);
        return r;
    }
    if (which == "thm2") return sweep_tutte_identity(seed);
    if (which == "cor2") return sweep_orientations(seed);
    if (which == "thm3") return sweep_lambda_squared(seed);
    if (which == "thm4") return sweep_lambda_minus1_squared(seed);
    if (which == "recursions") return sweep_recursions(seed);
    if (which == "patterns") {
        Report r = sweep_patterns(seed);
        for (const auto& c : sweep_oracles(seed)) r.push_back(c);
        return r;
    }
    throw UsageError("unknown verifier '" + which + "'");
}

void emit(const std::string& command, const Outcome& out, bool as_json, double seconds) {
    for (const auto& rec : out.records) {
        if (as_json) {
            json j{{"command", command}, {"input-digest", out.digest}, {"result", rec.result}, {"timing", seconds}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << rec.text << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic, Tutte and independence polynomials of hypergraphs and multigraphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit one JSON object per output line");
    app.fallthrough();

    std::string input = "-";
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Input file, '-' for stdin, or fixture:<name>");
    };

    auto* chrom = app.add_subcommand("chrom", "Chromatic polynomial of a hypergraph");
    std::string algo = "dc";
    unsigned level_vertex = 0;
    bool check_all = false;
    chrom->add_option("--algo", algo, "dc, interp, partition or level")
        ->check(CLI::IsMember({"dc", "interp", "partition", "level"}));
    chrom->add_option("--level-vertex", level_vertex, "Vertex used by the level recursion");
    chrom->add_flag("--check-all", check_all, "Run every applicable algorithm and compare");
    add_input(chrom);

    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a multigraph");
    std::string tutte_algo = "dc";
    tutte->add_option("--algo", tutte_algo, "dc or subset")->check(CLI::IsMember({"dc", "subset"}));
    add_input(tutte);

    auto* indep = app.add_subcommand("indep", "Independence polynomial of a simple graph");
    add_input(indep);

    auto* construct = app.add_subcommand("construct", "Build a hypergraph and print it as 'p hg'");
    std::string kind;
    unsigned s = 1, t = 2, p = 3;
    construct->add_option("kind", kind, "apex, edge, plus-k1, family, complete or copy")
        ->required()
        ->check(CLI::IsMember({"apex", "edge", "plus-k1", "family", "complete", "copy"}));
    add_input(construct);
    construct->add_option("--s", s, "family: size of the x block");
    construct->add_option("--t", t, "family: size of the y block");
    construct->add_option("--p", p, "complete: number of vertices");

    auto* orient = app.add_subcommand("orient", "Count acyclic and totally cyclic orientations");
    add_input(orient);

    auto* roots = app.add_subcommand("roots", "Isolate the real roots of a chromatic polynomial");
    unsigned bits = kDefaultPrecisionBits;
    roots->add_option("--precision-bits", bits, "Isolating interval width 2^-bits");
    add_input(roots);

    auto* verify = app.add_subcommand("verify", "Run identity and factor checks");
    std::string which;
    std::string verify_input;
    bool sweep = false;
    std::uint64_t seed = default_seed();
    verify->add_option("check", which, "thm1, thm2, cor2, thm3, thm4, recursions or patterns")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "cor2", "thm3", "thm4", "recursions", "patterns"}));
    auto* input_opt = verify->add_option("--input", verify_input, "Check a single instance");
    auto* sweep_opt = verify->add_flag("--sweep", sweep, "Run the seeded instance sweep");
    verify->add_option("--seed", seed, std::string("Sweep seed (default from ") + kSeedEnvironmentVariable + ")");
    input_opt->excludes(sweep_opt);

    auto* coeffs = app.add_subcommand("coeffs", "Whitney coefficients and coefficient patterns");
    add_input(coeffs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    Outcome out;
    try {
        if (sub == verify) {
            if (!sweep && verify_input.empty()) throw UsageError("verify needs --input <file> or --sweep");
            if (sweep) {
                out.digest = sha256_hex("sweep " + which + " seed " + std::to_string(seed));
                add_report(out, verify_sweep(which, seed));
            } else {
                const Input in = load_input(verify_input);
                out.digest = sha256_hex(in.text);
                add_report(out, verify_instance(which, in));
            }
        } else if (sub == construct) {
            const bool needs_input = kind == "apex" || kind == "edge" || kind == "plus-k1" || kind == "copy";
            const Input in = needs_input ? load_input(input) : Input{};
            out = run_construct(kind, in, s, t, p);
            out.digest = sha256_hex(needs_input ? in.text : kind);
        } else {
            const Input in = load_input(input);
            if (sub == chrom) out = run_chrom(in, algo, level_vertex, check_all);
            if (sub == tutte) out = run_tutte(in, tutte_algo);
            if (sub == indep) out = run_indep(in);
            if (sub == orient) out = run_orient(in);
            if (sub == roots) out = run_roots(in, bits);
            if (sub == coeffs) out = run_coeffs(in);
            out.digest = sha256_hex(in.text);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(sub->get_name(), out, as_json, seconds);
    return out.exit_code;
}
