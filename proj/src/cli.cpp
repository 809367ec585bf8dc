#include "cobweb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cobweb/chains.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/verify.hpp"

namespace cobweb::cli {

namespace {

constexpr const char* sequence_grammar =
    "sequences: naturals | fibonacci | gaussian:<q> | constant:<c> | custom:<t1>,<t2>,...";
constexpr const char* roots_grammar =
    "roots: zeros | lucas | geometric:<q> | constant:<v> | list:<a>,<b>,...";

/// Raised for argument values that parse but make no sense.
struct UsageError : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

Rational parse_rational(const std::string& text)
{
    try {
        Rational v(text);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError("invalid rational '" + text + "'");
    }
}

FSequence sequence_arg(const std::string& text)
{
    try {
        return make_sequence(text);
    } catch (const InvalidParameter& e) {
        throw UsageError(e.what());
    }
}

std::string render(const BoolMatrix& m, const std::string& style)
{
    auto parsed = parse_render_style(style);
    if (!parsed) throw UsageError("unknown style '" + style + "'");
    return render_la_scala(m, *parsed);
}

BoolMatrix zeta_for(const std::string& formula, const FSequence& seq, std::size_t size, int k_start)
{
    if (formula == "oracle") return zeta_definitional(seq, size);
    if (formula == "dziemianczuk") return zeta_dziemianczuk(seq, size);
    if (formula == "kwasniewski-fib") {
        if (seq.kind() != SequenceKind::fibonacci)
            throw UsageError("kwasniewski-fib applies to the fibonacci sequence only");
        return zeta_kwasniewski_fib(size, k_start);
    }
    const CobwebPoset poset = CobwebPoset::covering(seq, size);
    if (formula == "blocks") return zeta_blocks(seq, poset.n_levels()).principal(size);
    if (formula == "krot-grid") return zeta_krot_grid_matrix(poset).principal(size);
    throw UsageError("unknown zeta formula '" + formula + "'");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << text;
}

} // namespace

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

RootSequence parse_roots(const std::string& descriptor, int length)
{
    if (descriptor == "zeros") return RootSequence::zeros(length);
    if (descriptor == "lucas") return RootSequence::lucas(length);
    const auto colon = descriptor.find(':');
    const std::string head = descriptor.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    if (head == "geometric" && !body.empty())
        return RootSequence::geometric(parse_rational(body), length);
    if (head == "constant" && !body.empty())
        return RootSequence::constant(parse_rational(body), length);
    if (head == "list" && !body.empty()) return RootSequence(parse_rational_list(body), "list");
    throw UsageError("unknown root sequence '" + descriptor + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact F-nomials, connection constants and cobweb poset incidence matrices",
                 "cobweb"};
    app.require_subcommand(1);
    app.footer(std::string(sequence_grammar) + "\n" + roots_grammar);

    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the result to a file");

    std::string seq_text = "fibonacci";
    int n = 0;
    int k = 0;

    auto* fnomial_cmd = app.add_subcommand("fnomial", "F-nomial coefficient (n choose k)_F");
    fnomial_cmd->add_option("sequence", seq_text)->required();
    fnomial_cmd->add_option("n", n)->required();
    fnomial_cmd->add_option("k", k)->required();

    std::string form = "factorial";
    auto* triangle_cmd = app.add_subcommand("triangle", "F-nomial triangle as CSV");
    triangle_cmd->add_option("sequence", seq_text)->required();
    triangle_cmd->add_option("n_max", n)->required()->check(CLI::NonNegativeNumber);
    triangle_cmd->add_option("--form", form, "factorial | form-A | form-B | q-form");

    auto* ccc_cmd = app.add_subcommand("ccc", "Cumulative connection constant sum_k (n choose k)_F");
    ccc_cmd->add_option("sequence", seq_text)->required();
    ccc_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

    std::string r_text = "zeros";
    std::string s_text = "zeros";
    bool row_sums = false;
    auto* lah_cmd = app.add_subcommand("lah", "Generalized Lah numbers for root sequences [r], [s]");
    lah_cmd->add_option("--r", r_text, "roots of the q-basis");
    lah_cmd->add_option("--s", s_text, "roots of the p-basis");
    lah_cmd->add_option("--n", n, "largest row")->required()->check(CLI::NonNegativeNumber);
    lah_cmd->add_flag("--ccc", row_sums, "print row sums C_0..C_n instead of the table");

    std::string target_text;
    auto* solve_cmd =
        app.add_subcommand("solve-roots", "Roots [r] whose Lah row sums hit C_0,C_1,...");
    solve_cmd->add_option("target", target_text, "comma-separated C_0,...,C_n")->required();
    solve_cmd->add_option("--s", s_text, "roots of the p-basis");

    std::string formula;
    std::size_t size = 0;
    std::string style = "csv";
    int k_start = 0;
    std::string variant = "bracket";
    bool diff_report = false;
    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta matrix of the cobweb poset");
    zeta_cmd->add_option("sequence", seq_text);
    zeta_cmd
        ->add_option("--formula", formula,
                     "oracle | dziemianczuk | kwasniewski-fib | kwasniewski-general | blocks | krot-grid")
        ->required();
    zeta_cmd->add_option("--size", size, "matrix dimension V")->required()->check(CLI::PositiveNumber);
    zeta_cmd->add_option("--style", style, "csv | ascii | pgm");
    zeta_cmd->add_option("--k-start", k_start, "kwasniewski-fib inner sum start (0 or 1)")
        ->check(CLI::Range(0, 1));
    zeta_cmd->add_option("--variant", variant, "kwasniewski-general form: bracket | shifted");
    zeta_cmd->add_flag("--report", diff_report, "kwasniewski-general: print the diff report");

    auto* mobius_cmd = app.add_subcommand("mobius", "Moebius matrix as CSV");
    mobius_cmd->add_option("sequence", seq_text);
    mobius_cmd->add_option("--formula", formula, "inverse | krot:<each-minus-one|product-minus-one|rewritten>")
        ->required();
    mobius_cmd->add_option("--size", size)->required()->check(CLI::PositiveNumber);

    auto* lascala_cmd = app.add_subcommand("lascala", "Render the zeta staircase");
    lascala_cmd->add_option("sequence", seq_text);
    lascala_cmd->add_option("--size", size)->required()->check(CLI::PositiveNumber);
    lascala_cmd->add_option("--style", style, "ascii | pgm | csv");

    int from = 1;
    int to = 1;
    bool list = false;
    std::uint64_t cap = default_chain_cap;
    auto* chains_cmd = app.add_subcommand("chains", "Maximal chains of a layer");
    chains_cmd->add_option("sequence", seq_text);
    chains_cmd->add_option("--from", from, "first level")->required();
    chains_cmd->add_option("--to", to, "last level")->required();
    chains_cmd->add_flag("--list", list, "print every chain");
    chains_cmd->add_option("--cap", cap, "enumeration cap");

    std::string target;
    std::string verify_seq;
    std::size_t verify_size = 0;
    int verify_n = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd
        ->add_option("target", target,
                     "zeta-equivalence | mobius | partition-theorem | clue-examples | bell-identity | all")
        ->required()
        ->check(CLI::IsMember({"zeta-equivalence", "mobius", "partition-theorem", "clue-examples",
                               "bell-identity", "all"}));
    verify_cmd->add_option("sequence", verify_seq, "default: naturals, fibonacci, gaussian:2");
    verify_cmd->add_option("--size", verify_size, "matrix dimension");
    verify_cmd->add_option("--n", verify_n, "largest level / row");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        std::ostringstream result;
        int code = exit_ok;

        if (fnomial_cmd->parsed()) {
            result << fnomial(sequence_arg(seq_text), n, k).get_str() << '\n';
        } else if (triangle_cmd->parsed()) {
            const FSequence seq = sequence_arg(seq_text);
            if (form == "factorial") {
                result << fnomial_table(seq, n).to_csv();
            } else {
                auto parsed = parse_recurrence_form(form);
                if (!parsed) throw UsageError("unknown form '" + form + "'");
                result << fnomial_recurrence(seq, n, *parsed).to_csv();
            }
        } else if (ccc_cmd->parsed()) {
            result << ccc_rowsum(sequence_arg(seq_text), n).get_str() << '\n';
        } else if (lah_cmd->parsed()) {
            const RootSequence r = parse_roots(r_text, n);
            const RootSequence s = parse_roots(s_text, n);
            const ConnectionTable t = lah_table(r, s, n);
            if (row_sums) {
                for (int i = 0; i <= n; ++i) result << (i ? "," : "") << ccc(t, i).get_str();
                result << '\n';
            } else {
                result << t.to_csv();
            }
        } else if (solve_cmd->parsed()) {
            const auto values = parse_rational_list(target_text);
            const int len = static_cast<int>(values.size()) - 1;
            const RootSequence roots = solve_root_sequence(values, parse_roots(s_text, len));
            const auto& terms = roots.terms();
            for (std::size_t i = 0; i < terms.size(); ++i)
                result << (i ? "," : "") << terms[i].get_str();
            result << '\n';
        } else if (zeta_cmd->parsed()) {
            const FSequence seq = sequence_arg(seq_text);
            if (formula == "kwasniewski-general") {
                GeneralZetaVariant v;
                if (variant == "bracket")
                    v = GeneralZetaVariant::knuth_bracket;
                else if (variant == "shifted")
                    v = GeneralZetaVariant::shifted_delta;
                else
                    throw UsageError("unknown variant '" + variant + "'");
                const GeneralZetaReport report = zeta_kwasniewski_general(seq, size, v);
                if (diff_report)
                    result << format_mismatch_report(
                        "kwasniewski-general (" + variant + ") vs oracle, " + seq.descriptor() +
                            ", V=" + std::to_string(size),
                        report.mismatches);
                else if (style == "csv")
                    result << to_csv(report.raw);
                else
                    throw UsageError("kwasniewski-general has signed entries; only --style csv applies");
            } else {
                result << render(zeta_for(formula, seq, size, k_start), style);
            }
        } else if (mobius_cmd->parsed()) {
            const FSequence seq = sequence_arg(seq_text);
            if (formula == "inverse") {
                result << to_csv(mobius_from_zeta(zeta_definitional(seq, size)));
            } else if (formula.rfind("krot:", 0) == 0) {
                auto parse = parse_krot(formula.substr(5));
                if (!parse) throw UsageError("unknown krot parse '" + formula.substr(5) + "'");
                const CobwebPoset poset = CobwebPoset::covering(seq, size);
                result << to_csv(mobius_krot_matrix(poset, *parse).principal(size));
            } else {
                throw UsageError("unknown mobius formula '" + formula + "'");
            }
        } else if (lascala_cmd->parsed()) {
            result << render(zeta_definitional(sequence_arg(seq_text), size), style);
        } else if (chains_cmd->parsed()) {
            const FSequence seq = sequence_arg(seq_text);
            const CobwebPoset poset(seq, std::max(to, 1));
            const Layer layer(poset, from, to);
            if (list) {
                for (const Chain& c : enumerate_max_chains(layer, cap)) {
                    for (std::size_t i = 0; i < c.size(); ++i) result << (i ? "," : "") << c[i];
                    result << '\n';
                }
            } else {
                result << "enumerated: " << count_max_chains_enumerated(layer, cap) << '\n';
                result << "closed form: " << count_max_chains_closed(seq, from, to).get_str()
                       << '\n';
            }
        } else if (verify_cmd->parsed()) {
            std::vector<FSequence> seqs;
            if (verify_seq.empty())
                seqs = reference_sequences();
            else
                seqs.push_back(sequence_arg(verify_seq));

            std::vector<SuiteResult> suites;
            if (target == "all") {
                suites = verify_all();
            } else if (target == "zeta-equivalence") {
                for (const auto& seq : seqs)
                    suites.push_back(verify_zeta_equivalence(seq, verify_size ? verify_size : 90));
            } else if (target == "mobius") {
                for (const auto& seq : seqs)
                    suites.push_back(verify_mobius(seq, verify_size ? verify_size : 60));
            } else if (target == "partition-theorem") {
                for (const auto& seq : seqs)
                    suites.push_back(verify_partition_suite(seq, verify_n ? verify_n : 7));
            } else if (target == "clue-examples") {
                suites.push_back(verify_clue_examples(verify_n ? verify_n : 12));
            } else if (target == "bell-identity") {
                suites.push_back(verify_bell_identity(verify_n ? verify_n : 10));
            }

            std::size_t failed = 0;
            for (const auto& suite : suites) {
                result << format_suite(suite);
                failed += suite.passed() ? 0 : 1;
            }
            result << "summary: " << suites.size() - failed << " of " << suites.size()
                   << " suites passed\n";
            code = failed ? exit_failure : exit_ok;
        }

        write_output(result.str(), output_path, out);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << sequence_grammar << "\n" << roots_grammar << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace cobweb::cli
