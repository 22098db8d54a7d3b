// cosmetic: surgery invariants and the cosmetic-surgery obstruction from the command line.
//
// Exit status: 0 success, 1 computation or input error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cosmetic/cosmetic.hpp"

namespace {

using namespace cosmetic;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Slope slope_arg(const std::string& text) {
    try {
        return Slope::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string str(const Rational& x) { return to_string(x); }

struct KnotArgs {
    std::string file;
    std::string name;
};

void add_knot_options(CLI::App* cmd, KnotArgs& args, bool name_required = true) {
    cmd->add_option("--knot", args.file, "knot corpus (JSON)")->required();
    auto* name = cmd->add_option("--name", args.name, "record name");
    if (name_required) name->required();
}

KnotRecord load_one(const KnotArgs& args) { return find_knot(load_knots(args.file), args.name); }

const SeifertMatrix& need_seifert(const KnotRecord& k) {
    if (!k.seifert) throw std::invalid_argument("knot '" + k.name + "' has no Seifert matrix");
    return *k.seifert;
}

const KnotFloerData& need_hf(const KnotRecord& k) {
    if (!k.hf) throw std::invalid_argument("knot '" + k.name + "' has no hf data");
    return *k.hf;
}

int run_sweep(const KnotArgs& args, std::int64_t pmax, std::int64_t qmax, const std::string& out_path,
              unsigned threads, bool verbose) {
    const auto corpus = load_knots(args.file);
    std::vector<KnotRecord> knots;
    if (args.name.empty())
        knots = corpus;
    else
        knots.push_back(find_knot(corpus, args.name));

    std::ofstream file;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
    }
    std::ostream& csv = out_path == "-" ? std::cout : file;
    std::ostream& log = out_path == "-" ? std::cerr : std::cout;

    csv << "name,p,q1,q2,tag,witness1,witness2";
    if (verbose) csv << ",sigma,dedekind1,dedekind2";
    csv << "\n";

    std::int64_t bad = 0;
    for (const auto& k : knots) {
        const SweepReport report = sweep(k, pmax, qmax, DistinguishOptions{verbose}, threads);
        for (const auto& row : report.rows) {
            csv << '"' << row.name << '"' << ',' << row.p << ',' << row.q1 << ',' << row.q2 << ','
                << to_string(row.verdict.tag) << ',' << str(row.verdict.value1) << ',' << str(row.verdict.value2);
            if (verbose) {
                csv << ',' << (row.verdict.sigma ? std::to_string(*row.verdict.sigma) : std::string("NA")) << ','
                    << str(dedekind_sum(row.q1, row.q1 == 0 ? 1 : row.p)) << ','
                    << str(dedekind_sum(row.q2, row.p));
            }
            csv << "\n";
        }
        log << k.name << ":";
        for (const auto& [tag, n] : report.counts()) log << " " << to_string(tag) << "=" << n;
        log << " (+" << report.different_homology_pairs << " DifferentHomology pairs not listed)\n";
        if (k.nontrivial) bad += report.count(VerdictTag::Inconclusive);
    }
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surgery invariants and cosmetic-surgery obstructions"};
    app.require_subcommand(1);
    app.fallthrough();
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "print signatures and intermediate Dedekind sums");

    std::int64_t a = 0, b = 0;
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(A, B)");
    dedekind->add_option("A", a)->required();
    dedekind->add_option("B", b)->required();

    std::int64_t lens_p = 0, lens_q = 0;
    auto* lens = app.add_subcommand("lens", "Casson-Walker and Casson-Gordon invariants of L(P, Q)");
    lens->add_option("P", lens_p)->required();
    lens->add_option("Q", lens_q)->required();

    KnotArgs knot;
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial and Delta''(1)");
    add_knot_options(alexander, knot);

    std::string slope_text;
    auto* walker = app.add_subcommand("casson-walker", "lambda of a surgery");
    add_knot_options(walker, knot);
    walker->add_option("--slope", slope_text, "p/q")->required();

    auto* gordon = app.add_subcommand("casson-gordon", "total Casson-Gordon invariant of a surgery");
    add_knot_options(gordon, knot);
    gordon->add_option("--slope", slope_text, "p/q")->required();

    long m = 0;
    auto* signature = app.add_subcommand("signature", "sum of Tristram-Levine signatures over r = 1..M-1");
    add_knot_options(signature, knot);
    signature->add_option("--m", m, "M >= 1")->required()->check(CLI::PositiveNumber);

    bool use_oracle = false, use_formula = false, use_both = false;
    auto* hf = app.add_subcommand("hf-rank", "rank of HF-hat of a surgery");
    add_knot_options(hf, knot);
    hf->add_option("--slope", slope_text, "p/q")->required();
    auto* oracle_flag = hf->add_flag("--oracle", use_oracle, "mapping cone only");
    auto* formula_flag = hf->add_flag("--formula", use_formula, "closed formula only");
    auto* both_flag = hf->add_flag("--both", use_both, "both, and check they agree (default)");
    oracle_flag->excludes(formula_flag)->excludes(both_flag);
    formula_flag->excludes(both_flag);

    std::vector<std::string> slopes;
    auto* distinguish_cmd = app.add_subcommand("distinguish", "decide which invariant separates two surgeries");
    add_knot_options(distinguish_cmd, knot);
    distinguish_cmd->add_option("--slopes", slopes, "two slopes p/q")->required()->expected(2);

    std::int64_t pmax = 0, qmax = 0;
    std::string out_path = "-";
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "run distinguish over all same-sign slope pairs");
    add_knot_options(sweep_cmd, knot, false);
    sweep_cmd->add_option("--pmax", pmax)->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_path, "CSV path, '-' for stdout");
    sweep_cmd->add_option("--threads", threads, "worker threads, 0 = hardware");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dedekind) {
            std::cout << str(dedekind_sum(a, b)) << "\n";
        } else if (*lens) {
            const LensSpace l(lens_p, lens_q);
            std::cout << "lambda=" << str(lens_lambda(l)) << " tau_cg=" << str(lens_tau_cg(l)) << "\n";
        } else if (*alexander) {
            const KnotRecord k = load_one(knot);
            std::cout << "delta=" << k.alexander.str() << "\n";
            std::cout << "delta2=" << k.delta2() << "\n";
            if (verbose) {
                const auto form = parse_lspace_form(k.alexander);
                std::cout << "lspace_form=";
                if (!form) {
                    std::cout << "none";
                } else {
                    std::cout << "[";
                    for (std::size_t i = 0; i < form->k(); ++i) std::cout << (i ? "," : "") << form->exponents[i];
                    std::cout << "]";
                }
                std::cout << "\n";
            }
        } else if (*walker) {
            const KnotRecord k = load_one(knot);
            const Slope s = slope_arg(slope_text);
            if (s.is_infinite()) {
                std::cout << "lambda=" << str(k.lambda_ambient) << "\n";
            } else {
                std::cout << "lambda=" << str(casson_walker_surgered(k.ambient(), k.delta2(), s)) << "\n";
                if (verbose) std::cout << "dedekind=" << str(dedekind_sum(s.q(), s.p())) << "\n";
            }
        } else if (*gordon) {
            const KnotRecord k = load_one(knot);
            const Slope s = slope_arg(slope_text);
            if (s.is_infinite() || s.p() == 0) throw std::invalid_argument("slope must have p != 0 and q != 0");
            const long n = static_cast<long>(abs64(s.p()));
            const int sigma = sigma_total(need_seifert(k), n);
            std::cout << "tau=" << str(casson_gordon_surgered(sigma, s)) << "\n";
            if (verbose) {
                std::cout << "sigma=" << sigma << "\n";
                std::cout << "lens_tau=" << str(lens_tau_cg(LensSpace(s.p(), s.q()))) << "\n";
                std::cout << "dedekind=" << str(dedekind_sum(s.q(), s.p())) << "\n";
            }
        } else if (*signature) {
            const KnotRecord k = load_one(knot);
            const SeifertMatrix& sm = need_seifert(k);
            if (verbose) {
                for (long r = 1; r < m; ++r) {
                    std::cout << "r=" << r << " ";
                    try {
                        const int value = tl_signature(sm, r, m);
                        std::cout << "sigma=" << value << "\n";
                    } catch (const SingularValueError&) {
                        std::cout << "singular\n";
                    }
                }
            }
            const int total = sigma_total(sm, m);
            std::cout << "sigma=" << total << "\n";
        } else if (*hf) {
            const KnotRecord k = load_one(knot);
            const KnotFloerData& data = need_hf(k);
            const Slope s = slope_arg(slope_text);
            if (!s.is_infinite() && s.p() == 0) throw std::invalid_argument("0-surgery has infinite H_1");
            const bool want_oracle = use_oracle || (!use_formula);
            const bool want_formula = use_formula || (!use_oracle);
            const std::int64_t oracle = want_oracle ? (s.is_infinite() ? 1 : cone_rank_oracle(data, s)) : 0;
            const std::int64_t formula = want_formula ? hat_rank(data, s) : 0;
            if (want_oracle && want_formula) {
                std::cout << "oracle=" << oracle << " formula=" << formula << "\n";
                if (oracle != formula) {
                    std::cerr << "error: mapping cone and closed formula disagree\n";
                    return 1;
                }
            } else if (want_oracle) {
                std::cout << "oracle=" << oracle << "\n";
            } else {
                std::cout << "formula=" << formula << "\n";
            }
        } else if (*distinguish_cmd) {
            const KnotRecord k = load_one(knot);
            const Slope s1 = slope_arg(slopes.at(0));
            const Slope s2 = slope_arg(slopes.at(1));
            const Verdict v = distinguish(k, s1, s2, DistinguishOptions{verbose});
            std::cout << "tag=" << to_string(v.tag) << " witness1=" << str(v.value1) << " witness2=" << str(v.value2)
                      << "\n";
            if (verbose) {
                auto ded = [](const Slope& s) { return s.is_infinite() ? Rational(0) : dedekind_sum(s.q(), s.p()); };
                std::cout << "dedekind1=" << str(ded(s1)) << " dedekind2=" << str(ded(s2)) << "\n";
                std::cout << "sigma=" << (v.sigma ? std::to_string(*v.sigma) : std::string("NA")) << "\n";
            }
        } else if (*sweep_cmd) {
            return run_sweep(knot, pmax, qmax, out_path, threads, verbose);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
