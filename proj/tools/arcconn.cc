/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/certificate_json.hh>
#include <arcconn/class_spec.hh>
#include <arcconn/constructions.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace arcconn;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_ok = 0, exit_check_failed = 1, exit_usage = 2;

    /// Thrown for argument combinations CLI11 cannot express.
    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto vertex_name(Vertex v, const optional<ProductShape> & product) -> string
    {
        if (! product)
            return std::to_string(v);
        return "(" + std::to_string(v / product->m) + "," + std::to_string(v % product->m) + ")";
    }

    auto arc_list(const ArcSet & arcs, const optional<ProductShape> & product) -> string
    {
        string result;
        for (auto & a : arcs) {
            if (! result.empty())
                result += " ";
            result += vertex_name(a.from, product) + "->" + vertex_name(a.to, product);
        }
        return result;
    }

    auto print_members(std::ostream & out, const CertificateFamily & family, const optional<ProductShape> & product) -> void
    {
        for (size_t i = 0 ; i < family.members.size() ; ++i)
            out << "  D" << (i + 1) << ": " << arc_list(family.members[i], product) << "\n";
    }

    auto write_output(const string & filename, const string & text) -> void
    {
        if (filename.empty() || filename == "-") {
            cout << text;
            return;
        }
        std::ofstream out{ filename };
        if (! out)
            throw UsageError{ "cannot write " + filename };
        out << text;
    }

    auto require_seed(const optional<RngSeed> & seed, const string & command) -> RngSeed
    {
        if (! seed)
            throw UsageError{ command + " is randomized and needs an explicit --seed" };
        return *seed;
    }

    /// "i,j:i,j" in product coordinates.
    auto parse_seed_pair(const string & text, int n, int m) -> SeedPair
    {
        int xi, xj, yi, yj;
        char c1, c2, c3;
        std::istringstream in{ text };
        if (! (in >> xi >> c1 >> xj >> c2 >> yi >> c3 >> yj) || c1 != ',' || c2 != ':' || c3 != ',' || ! (in >> std::ws).eof())
            throw ParseError{ "seed pair must look like i,j:i,j, got '" + text + "'" };
        for (auto [i, j] : { std::pair{ xi, xj }, std::pair{ yi, yj } })
            if (i < 0 || i >= n || j < 0 || j >= m)
                throw ParseError{ "seed vertex (" + std::to_string(i) + "," + std::to_string(j) + ") is outside the product" };
        return SeedPair::checked(xi * m + xj, yi * m + yj, n * m);
    }

    auto dump_factor_pair(std::ostream & out, const Digraph & g, const Digraph & h) -> void
    {
        out << "  G:\n";
        write_digraph_text(out, g);
        out << "  H:\n";
        write_digraph_text(out, h);
    }

    auto cmd_lambda(const vector<string> & words) -> int
    {
        auto input = parse_input_expression(words);
        if (input.digraph.order() < 2)
            throw UsageError{ "arc connectivity needs at least 2 vertices" };

        auto report = arc_connectivity(input.digraph);
        cout << "input: " << input.label << " (" << input.digraph.order() << " vertices, " << input.digraph.size() << " arcs)\n";
        if (! report.strong)
            cout << "warning: digraph is not strong, lambda = 0\n";
        cout << "lambda = " << report.lambda << "\n";
        cout << "delta+ = " << report.delta_out << "\n";
        cout << "delta- = " << report.delta_in << "\n";
        cout << "min cut: " << arc_list(report.min_cut, input.product) << "\n";
        return exit_ok;
    }

    struct Lambda2Options
    {
        vector<string> words;
        optional<int> sampled;
        optional<RngSeed> seed;
        bool json = false;
        string output;
    };

    auto cmd_lambda2(const Lambda2Options & o) -> int
    {
        auto input = parse_input_expression(o.words);
        if (input.digraph.order() < 2)
            throw UsageError{ "lambda_2 needs at least 2 vertices" };

        auto mode = Lambda2Mode::exhaustive();
        if (o.sampled)
            mode = Lambda2Mode::sample(*o.sampled, require_seed(o.seed, "lambda2 --sampled"));

        auto result = lambda_2(input.digraph, mode);

        if (o.json) {
            write_output(o.output, certificate_to_json(CertificateBundle{ input.digraph.order(), result.witness, input.digraph, input.product }));
            return exit_ok;
        }

        cout << "input: " << input.label << " (" << input.digraph.order() << " vertices, " << input.digraph.size() << " arcs)\n";
        if (result.upper_bound)
            cout << "lambda_2 <= " << result.value << " (upper bound from " << result.pairs_examined << " sampled pairs, seed " << *o.seed << ")\n";
        else if (! result.exact)
            cout << "lambda_2 ~ " << result.value << " (search budget exhausted, not exact)\n";
        else
            cout << "lambda_2 = " << result.value << "\n";
        cout << "argmin S = {" << vertex_name(result.argmin.x, input.product) << ", " << vertex_name(result.argmin.y, input.product) << "}\n";
        cout << "witness (" << result.witness.members.size() << " arc-disjoint S-strong subgraphs):\n";
        print_members(cout, result.witness, input.product);
        if (! o.output.empty())
            write_output(o.output, certificate_to_json(CertificateBundle{ input.digraph.order(), result.witness, input.digraph, input.product }));
        return exit_ok;
    }

    struct CheckOptions
    {
        string target;
        int trials = 50;
        int min_order = 2;
        int max_order = 0;
        int max = 4;
        optional<RngSeed> seed;
    };

    auto check_thm31(const CheckOptions & o) -> int
    {
        RngSeed seed = require_seed(o.seed, "check thm31");
        int max_order = o.max_order ? o.max_order : 6;
        int failures = 0;
        for (int t = 0 ; t < o.trials ; ++t) {
            auto [g, h] = random_strong_pair(seed + t, o.min_order, max_order);
            auto c = check_theorem31(g, h);
            cout << "trial " << t << " seed " << (seed + t) << ": |G|=" << g.order() << " |H|=" << h.order()
                << " formula=" << c.formula.value << " (" << to_string(c.formula.argmin) << ") observed=" << c.observed.lambda
                << (c.passed ? " pass" : " FAIL") << "\n";
            if (! c.passed) {
                ++failures;
                dump_factor_pair(cout, g, h);
            }
        }
        cout << (o.trials - failures) << "/" << o.trials << " passed\n";
        return failures ? exit_check_failed : exit_ok;
    }

    auto check_bounds_cmd(const CheckOptions & o) -> int
    {
        RngSeed seed = require_seed(o.seed, "check bounds");
        int max_order = o.max_order ? o.max_order : 4;
        int failures = 0;
        for (int t = 0 ; t < o.trials ; ++t) {
            auto [g, h] = random_strong_pair(seed + t, o.min_order, max_order);
            auto b = check_bounds(g, h, true);
            bool ok = b.sandwiched();
            cout << "trial " << t << " seed " << (seed + t) << ": " << b.lower << " <= " << *b.observed << " <= " << b.upper.value
                << (ok ? " pass" : " FAIL") << "\n";
            if (! ok) {
                ++failures;
                dump_factor_pair(cout, g, h);
            }
        }
        cout << (o.trials - failures) << "/" << o.trials << " passed\n";
        return failures ? exit_check_failed : exit_ok;
    }

    constexpr DigraphClass all_classes[] = { DigraphClass::dicycle, DigraphClass::bicycle, DigraphClass::bitree, DigraphClass::bicomplete };

    auto check_table1(const CheckOptions & o) -> int
    {
        if (o.max < 2 || o.max > 5)
            throw UsageError{ "check table1 --max must be between 2 and 5" };

        int failures = 0, entries = 0;
        for (auto kind : { TreeKind::path, TreeKind::star })
            for (int n = 2 ; n <= o.max ; ++n)
                for (int m = 2 ; m <= o.max ; ++m) {
                    cout << "n=" << n << " m=" << m << " trees=" << tree_shape_name(TreeShape{ kind }) << "\n";
                    cout << std::left << std::setw(12) << "";
                    for (auto c : all_classes)
                        cout << std::setw(12) << to_string(c);
                    cout << "\n";
                    for (auto r : all_classes) {
                        cout << std::setw(12) << to_string(r);
                        for (auto c : all_classes) {
                            string cell = "-";
                            if (n >= min_order(r) && m >= min_order(c)) {
                                auto p = cartesian_product(class_digraph(r, n, TreeShape{ kind }), class_digraph(c, m, TreeShape{ kind }));
                                int observed = lambda_2(p.digraph()).value, expected = table1_value(r, c, n, m);
                                ++entries;
                                if (observed == expected)
                                    cell = std::to_string(observed);
                                else {
                                    ++failures;
                                    cell = std::to_string(observed) + "!=" + std::to_string(expected);
                                }
                            }
                            cout << std::setw(12) << cell;
                        }
                        cout << "\n";
                    }
                    cout << std::right << "\n";
                }
        cout << (entries - failures) << "/" << entries << " entries match\n";
        return failures ? exit_check_failed : exit_ok;
    }

    auto check_eq2(const CheckOptions & o) -> int
    {
        RngSeed seed = require_seed(o.seed, "check eq2");
        int max_order = o.max_order ? o.max_order : 3;
        if (max_order > 4)
            throw UsageError{ "check eq2 --max-order is limited to 4" };

        Rng rng{ seed };
        int failures = 0;
        for (int t = 0 ; t < o.trials ; ++t) {
            int ng = rng.between(o.min_order, max_order), nh = rng.between(o.min_order, max_order);
            auto g = random_connected_graph(ng, 0.5 * rng.real(), rng.below(~std::uint64_t{ 0 }));
            auto h = random_connected_graph(nh, 0.5 * rng.real(), rng.below(~std::uint64_t{ 0 }));
            int observed = lambda_2(cartesian_product(biorient(g), biorient(h)).digraph()).value;
            int expected = undirected_product_lambda(g, h);
            bool ok = observed == expected;
            cout << "trial " << t << ": |G|=" << ng << " |H|=" << nh << " lambda_2=" << observed << " formula=" << expected
                << (ok ? " pass" : " FAIL") << "\n";
            if (! ok) {
                ++failures;
                dump_factor_pair(cout, biorient(g), biorient(h));
            }
        }
        cout << (o.trials - failures) << "/" << o.trials << " passed\n";
        return failures ? exit_check_failed : exit_ok;
    }

    auto cmd_check(const CheckOptions & o) -> int
    {
        if (o.trials < 0 || o.min_order < 2 || (o.max_order && o.max_order < o.min_order))
            throw UsageError{ "need trials >= 0 and 2 <= min-order <= max-order" };
        if (o.target == "thm31")
            return check_thm31(o);
        if (o.target == "bounds")
            return check_bounds_cmd(o);
        if (o.target == "table1")
            return check_table1(o);
        return check_eq2(o);
    }

    struct ConstructOptions
    {
        string prop;
        int n = 0, m = 0;
        string seeds;
        string shape = "path";
        string g, h;
        string output;
    };

    auto cmd_construct(const ConstructOptions & o) -> int
    {
        CertificateBundle bundle{ 0, {}, std::nullopt, std::nullopt };
        string detail;

        if (o.prop == "lift") {
            if (o.g.empty() || o.h.empty())
                throw UsageError{ "construct lift needs --g and --h" };
            auto g = parse_class_spec(o.g).digraph, h = parse_class_spec(o.h).digraph;
            auto s = parse_seed_pair(o.seeds, g.order(), h.order());
            auto result = lift_certificates(g, h, s);
            int lower = lambda_2(g).value + lambda_2(h).value - 1;
            detail = to_string(result.kind) + (result.dropped_member ? ", one conflicting member dropped" : "")
                + ", lower bound " + std::to_string(lower);
            bundle = CertificateBundle{ result.product.digraph().order(), result.family, result.product.digraph(), result.product.shape() };
        }
        else {
            DigraphClass second = o.prop == "p51" ? DigraphClass::dicycle : o.prop == "p52" ? DigraphClass::bicycle
                : o.prop == "p53" ? DigraphClass::bitree : DigraphClass::bicomplete;
            if (o.n < 3 || o.m < min_order(second))
                throw UsageError{ "construct " + o.prop + " needs -n >= 3 and -m >= " + std::to_string(min_order(second)) };
            auto shape = parse_tree_shape(o.shape);
            auto s = parse_seed_pair(o.seeds, o.n, o.m);
            auto result = prop_certificates(second, o.n, o.m, s, shape);
            detail = "routing " + to_string(result.routing);
            bundle = CertificateBundle{ result.product.digraph().order(), result.family, result.product.digraph(), result.product.shape() };
        }

        auto & summary = o.output.empty() ? cerr : cout;
        summary << "members: " << bundle.family.members.size() << " (" << detail << ")\n";
        print_members(summary, bundle.family, bundle.factors);
        write_output(o.output, certificate_to_json(bundle));
        return exit_ok;
    }

    struct ExportOptions
    {
        vector<string> words;
        bool dot = false, json = false, text = false;
        string format;
        string cert;
        string output;
    };

    auto cmd_export(const ExportOptions & o) -> int
    {
        string format = o.format;
        for (auto [flag, name] : { std::pair{ o.dot, "dot" }, std::pair{ o.json, "json" }, std::pair{ o.text, "text" } })
            if (flag) {
                if (! format.empty() && format != name)
                    throw UsageError{ "choose one output format" };
                format = name;
            }
        if (format.empty())
            format = "dot";
        if (format != "dot" && format != "json" && format != "text")
            throw UsageError{ "unknown format '" + format + "', choose from dot, json, text" };

        optional<Digraph> host;
        optional<ProductShape> product;
        optional<CertificateBundle> cert;
        if (! o.cert.empty()) {
            cert = read_certificate_file(o.cert);
            host = cert->host;
            product = cert->factors;
        }
        if (! o.words.empty()) {
            auto input = parse_input_expression(o.words);
            host = input.digraph;
            product = input.product;
        }
        if (! host)
            throw UsageError{ "export needs a digraph expression or a certificate that carries its host arcs" };

        std::ostringstream out;
        if (format == "dot") {
            DotOptions options{ product, {} };
            if (cert)
                options.highlighted = cert->family.members;
            write_dot(out, *host, options);
        }
        else if (format == "json")
            out << (cert ? certificate_to_json(CertificateBundle{ host->order(), cert->family, host, product }) : digraph_to_json(*host, product));
        else
            write_digraph_text(out, *host, product);
        write_output(o.output, out.str());
        return exit_ok;
    }

    struct HuntOptions
    {
        int trials = 100;
        int min_order = 2, max_order = 4;
        optional<RngSeed> seed;
        string out_dir;
        bool classes = false;
    };

    auto cmd_hunt(const HuntOptions & o) -> int
    {
        RngSeed seed = require_seed(o.seed, "hunt");
        if (o.trials < 0 || o.min_order < 2 || o.max_order < o.min_order)
            throw UsageError{ "need trials >= 0 and 2 <= min-order <= max-order" };

        auto report = hunt_tightness(HuntConfig{ o.min_order, o.max_order, o.classes }, o.trials, seed);

        cout << "instances: " << report.trials.size() << "\n";
        cout << "gap (observed - lower)  count\n";
        for (auto [gap, count] : report.gap_histogram)
            cout << std::setw(22) << gap << "  " << count << "\n";
        cout << "lower bound attained: " << report.witnesses.size() << "\n";
        cout << "all within bounds: " << (report.all_sandwiched ? "yes" : "NO") << "\n";

        for (auto & t : report.trials)
            if (! t.bounds.sandwiched()) {
                cout << "outside bounds: " << t.label << "\n";
                dump_factor_pair(cout, t.g, t.h);
            }

        if (! o.out_dir.empty() && ! report.witnesses.empty()) {
            std::filesystem::create_directories(o.out_dir);
            for (size_t k = 0 ; k < report.witnesses.size() ; ++k) {
                auto & w = report.witnesses[k];
                auto p = cartesian_product(w.trial.g, w.trial.h);
                auto base = std::filesystem::path{ o.out_dir } / ("witness-" + std::to_string(k));
                write_output(base.string() + "-product.json",
                        certificate_to_json(CertificateBundle{ p.digraph().order(), w.product_lambda2.witness, p.digraph(), p.shape() }));
                write_output(base.string() + "-g.json",
                        certificate_to_json(CertificateBundle{ w.trial.g.order(), w.g_lambda2.witness, w.trial.g, std::nullopt }));
                write_output(base.string() + "-h.json",
                        certificate_to_json(CertificateBundle{ w.trial.h.order(), w.h_lambda2.witness, w.trial.h, std::nullopt }));
                cout << "witness " << k << ": " << w.trial.label << " -> " << base.string() << "-{product,g,h}.json\n";
            }
        }
        return report.all_sandwiched ? exit_ok : exit_check_failed;
    }

    struct VerifyOptions
    {
        string cert;
        vector<string> host_words;
        optional<int> expect;
    };

    auto cmd_verify(const VerifyOptions & o) -> int
    {
        auto bundle = read_certificate_file(o.cert);
        optional<Digraph> host = bundle.host;
        if (! o.host_words.empty())
            host = parse_input_expression(o.host_words).digraph;
        if (! host)
            throw UsageError{ "certificate has no \"arcs\" field; give the host with --host" };
        if (host->order() != bundle.order)
            throw UsageError{ "host order does not match the certificate" };

        auto report = verify_certificate(*host, bundle.family);
        cout << "members: " << bundle.family.members.size() << "\n";
        cout << report.describe() << "\n";
        if (! report.valid)
            return exit_check_failed;
        if (o.expect && int(bundle.family.members.size()) < *o.expect) {
            cout << "expected at least " << *o.expect << " members\n";
            return exit_check_failed;
        }
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Arc-strong connectivity and strong subgraph 2-arc-connectivity of digraphs and Cartesian products" };
    app.require_subcommand(1);
    app.footer(class_spec_help);

    vector<string> lambda_words;
    auto lambda = app.add_subcommand("lambda", "Arc-strong connectivity, degrees and a minimum cut");
    lambda->add_option("input", lambda_words, "Digraph token or A x B")->required();

    Lambda2Options l2;
    auto lambda2 = app.add_subcommand("lambda2", "Strong subgraph 2-arc-connectivity with a witness");
    lambda2->add_option("input", l2.words, "Digraph token or A x B")->required();
    lambda2->add_option("--sampled", l2.sampled, "Only sample this many seed pairs (gives an upper bound)")->check(CLI::PositiveNumber);
    lambda2->add_option("--seed", l2.seed, "Seed for --sampled");
    lambda2->add_flag("--json", l2.json, "Print the witness as certificate JSON");
    lambda2->add_option("-o,--output", l2.output, "Write the witness certificate JSON to this file");

    CheckOptions check;
    auto check_cmd = app.add_subcommand("check", "Check formulas and bounds against exhaustive computation");
    check_cmd->add_option("target", check.target, "thm31, bounds, table1 or eq2")->required()
        ->check(CLI::IsMember({ "thm31", "bounds", "table1", "eq2" }));
    check_cmd->add_option("--trials", check.trials, "Random instances");
    check_cmd->add_option("--min-order", check.min_order, "Smallest factor order");
    check_cmd->add_option("--max-order", check.max_order, "Largest factor order");
    check_cmd->add_option("--max", check.max, "Largest class order for table1");
    check_cmd->add_option("--seed", check.seed, "Seed for random instances");

    ConstructOptions construct;
    auto construct_cmd = app.add_subcommand("construct", "Build and verify an explicit certificate family");
    construct_cmd->set_help_flag("--help", "Print this help message and exit");
    construct_cmd->add_option("prop", construct.prop, "p51, p52, p53, p54 or lift")->required()
        ->check(CLI::IsMember({ "p51", "p52", "p53", "p54", "lift" }));
    construct_cmd->add_option("-n", construct.n, "Order of the directed cycle factor");
    construct_cmd->add_option("-m", construct.m, "Order of the second factor");
    construct_cmd->add_option("-S,--seeds", construct.seeds, "Seed pair as i,j:i,j")->required();
    construct_cmd->add_option("--shape", construct.shape, "Tree shape for p53");
    construct_cmd->add_option("--g", construct.g, "First factor for lift");
    construct_cmd->add_option("--h", construct.h, "Second factor for lift");
    construct_cmd->add_option("-o,--output", construct.output, "Certificate JSON file (default: standard output)");

    ExportOptions exp;
    auto export_cmd = app.add_subcommand("export", "Write a digraph or certificate as DOT, JSON or text");
    export_cmd->add_option("input", exp.words, "Digraph token or A x B");
    export_cmd->add_flag("--dot", exp.dot, "Graphviz DOT");
    export_cmd->add_flag("--json", exp.json, "JSON");
    export_cmd->add_flag("--text", exp.text, "Plain arc list");
    export_cmd->add_option("--format", exp.format, "dot, json or text");
    export_cmd->add_option("--cert", exp.cert, "Certificate JSON to overlay or re-emit");
    export_cmd->add_option("-o,--output", exp.output, "Output file (default: standard output)");

    HuntOptions hunt;
    auto hunt_cmd = app.add_subcommand("hunt", "Search random products for pairs attaining the lower bound");
    hunt_cmd->add_option("--trials", hunt.trials, "Random factor pairs");
    hunt_cmd->add_option("--min-order", hunt.min_order, "Smallest factor order");
    hunt_cmd->add_option("--max-order", hunt.max_order, "Largest factor order");
    hunt_cmd->add_option("--seed", hunt.seed, "Seed");
    hunt_cmd->add_option("--out", hunt.out_dir, "Directory for witness certificates");
    hunt_cmd->add_flag("--classes", hunt.classes, "Also run the sixteen class pairs at order 3");

    VerifyOptions verify;
    auto verify_cmd = app.add_subcommand("verify", "Verify a certificate JSON file");
    verify_cmd->add_option("--cert", verify.cert, "Certificate JSON")->required();
    verify_cmd->add_option("--host", verify.host_words, "Host digraph, if the file has no arcs");
    verify_cmd->add_option("--expect", verify.expect, "Fail unless at least this many members");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (lambda->parsed())
            return cmd_lambda(lambda_words);
        if (lambda2->parsed())
            return cmd_lambda2(l2);
        if (check_cmd->parsed())
            return cmd_check(check);
        if (construct_cmd->parsed())
            return cmd_construct(construct);
        if (export_cmd->parsed())
            return cmd_export(exp);
        if (hunt_cmd->parsed())
            return cmd_hunt(hunt);
        if (verify_cmd->parsed())
            return cmd_verify(verify);
    }
    catch (const ConstructionError & e) {
        cerr << "construction failed verification: " << e.what() << "\n";
        return exit_check_failed;
    }
    catch (const ParseError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const InvalidInput & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const UsageError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
