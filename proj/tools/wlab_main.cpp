#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wlab/serialize.hpp"

using namespace wlab;

namespace {

struct GlobalOptions {
    std::string json_out;
    unsigned workers = 0;
};

void emit(const Json& j, const GlobalOptions& global) {
    std::cout << j.dump(2) << "\n";
    if (!global.json_out.empty()) {
        std::ofstream out(global.json_out);
        if (!out)
            throw UsageError("cannot write to '" + global.json_out + "'");
        out << j.dump(2) << "\n";
    }
}

void summarize(const SuiteReport& report) {
    for (const auto& e : report.entries)
        std::cerr << "[" << to_string(e.status) << "] " << e.check_id << " "
                  << e.params.dump() << " (" << e.elapsed_ms << " ms)\n";
    std::cerr << "overall: " << to_string(report.overall()) << "\n";
}

class Timer {
public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckEntry make_entry(std::string check_id, Json params, bool pass, Json data,
                      long long elapsed_ms) {
    return {std::move(check_id), std::move(params),
            pass ? CheckStatus::pass : CheckStatus::fail, std::move(data), elapsed_ms};
}

// ---- check builders shared by the per-topic commands and `report` ----------

CheckEntry check_ct_verify(int k, int p, long budget_seconds, unsigned workers) {
    Timer timer;
    CtVerification v = verify_theorem_ct(k, p, std::chrono::seconds(budget_seconds), workers);
    CheckStatus status = CheckStatus::fail;
    if (v.status == VerifyStatus::pass)
        status = CheckStatus::pass;
    else if (v.status == VerifyStatus::shape_only)
        status = CheckStatus::shape_only;
    return {"theorem-ct", Json{{"k", k}, {"p", p}}, status, json_of(v), timer.ms()};
}

CheckEntry check_conjecture(int k, int m, long budget_seconds, unsigned workers) {
    Timer timer;
    const int p = 2 * m + 1;
    const long i = static_cast<long>(p) * k + 1; // CT pole order (2m+1)k, Res form
    Json params{{"k", k}, {"m", m}, {"p", p}, {"i", i}};
    Rational expected = conjectured_base_constant(k, m);
    OracleOptions opts;
    opts.workers = workers;
    opts.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(budget_seconds);
    try {
        ResidueResult r = brute_residue({k, i, p, 0, true}, opts);
        Rational value = r.value.coeff(0);
        bool constant = r.value.degree() <= 0;
        bool match = constant && abs(value) == expected;
        Json data{{"oracle_value", value.str()},
                  {"conjectured_magnitude", expected.str()},
                  {"sign", value.sign() >= 0 ? "+" : "-"},
                  {"constant", constant}};
        return make_entry("log-dyson", params, match, data, timer.ms());
    } catch (const BudgetExceeded&) {
        Json data{{"conjectured_magnitude", expected.str()}, {"note", "oracle budget exceeded"}};
        return {"log-dyson", params, CheckStatus::shape_only, data, timer.ms()};
    }
}

std::vector<CheckEntry> checks_chars(int p, long order,
                                     const std::vector<Rational>& normalizations) {
    std::vector<CheckEntry> out;
    {
        Timer timer;
        SingletFockCheck sf = singlet_fock_check(p, order);
        out.push_back(make_entry("singlet-fock", Json{{"p", p}, {"order", order}}, sf.pass,
                                 Json::object(), timer.ms()));
    }
    {
        Timer timer;
        LatticeSumCheck ls = x2p_lattice_check(p, order);
        out.push_back(make_entry("x2p-lattice-sum", Json{{"p", p}, {"order", order}}, ls.pass,
                                 Json::object(), timer.ms()));
    }
    for (int r = 1; r <= (p - 1) / 2; ++r) {
        Timer timer;
        QSeries chi = minimal_model_char(p, r, order);
        bool nonneg = chi.nonneg_integer_below(Rational(order));
        bool matches = QSeries::equal_below(chi, minimal_model_alternating_sum(p, r, order),
                                            Rational(order));
        out.push_back(make_entry("minimal-model", Json{{"p", p}, {"r", r}, {"order", order}},
                                 nonneg && matches,
                                 Json{{"nonneg_integer", nonneg}, {"alternating_sum", matches}},
                                 timer.ms()));
    }
    {
        Timer timer;
        bool all = true;
        const Rational c24 = central_charge(p) / Rational(24);
        for (int k = 1; k <= p && all; ++k) {
            for (int base : {2, 3}) {
                QSeries lhs = QSeries().truncated(Rational(order));
                for (long n = 0;; ++n) {
                    long row = 2 * n + base;
                    if (conformal_weight(p, row, k) - c24 > Rational(order))
                        break;
                    lhs = lhs + virasoro_char(p, row, k, order).scaled(Rational(n + 1));
                }
                TripletFamily plus = base == 3 ? TripletFamily::X1Plus : TripletFamily::X2Plus;
                TripletFamily minus = base == 3 ? TripletFamily::X1Minus : TripletFamily::X2Minus;
                QSeries rhs = triplet_char_decomp(p, plus, k, order) +
                              triplet_char_decomp(p, minus, k, order);
                all = all && QSeries::equal_below(lhs, rhs, Rational(order));
            }
        }
        out.push_back(make_entry("doublet-module-pairing", Json{{"p", p}, {"order", order}},
                                 all, Json::object(), timer.ms()));
    }
    {
        Timer timer;
        ThetaCalibration cal = calibrate_theta_formula(p, order, normalizations);
        out.push_back({"theta-formula-calibration", Json{{"p", p}, {"order", order}},
                       CheckStatus::finding, json_of(cal), timer.ms()});
    }
    return out;
}

std::vector<CheckEntry> checks_closure(int p, long order) {
    Timer timer;
    auto basis = closure_basis(p, order);
    ClosureRank rank = closure_rank(basis);
    std::size_t expected = static_cast<std::size_t>((15 * p - 5) / 2);
    std::vector<CheckEntry> out;
    out.push_back(make_entry("closure-cardinality", Json{{"p", p}, {"order", order}},
                             rank.cardinality == expected,
                             Json{{"cardinality", rank.cardinality}, {"expected", expected}},
                             timer.ms()));
    out.push_back(make_entry("closure-rank", Json{{"p", p}, {"order", order}},
                             rank.rank == rank.cardinality, json_of(rank), timer.ms()));
    return out;
}

std::vector<CheckEntry> checks_zhu(int p) {
    std::vector<CheckEntry> out;
    Timer total;

    WeightSet ws = weight_set(p);
    const std::size_t expected_count = static_cast<std::size_t>(4 * p + (p - 1) / 2);
    {
        bool distinct = ws.values.size() == ws.entries.size();
        bool count_ok = ws.values.size() == expected_count;
        // a value collision would be a finding about the weight family,
        // not a failure of the computation
        CheckStatus status = count_ok && distinct ? CheckStatus::pass : CheckStatus::finding;
        out.push_back({"weight-set", Json{{"p", p}}, status,
                       Json{{"labels", ws.entries.size()},
                            {"distinct_values", ws.values.size()},
                            {"expected", expected_count},
                            {"weights", json_of(ws)}},
                       total.ms()});
    }

    Timer t_f2p;
    Poly f1 = f2p(p, 1);
    Poly f2 = f2p(p, 2);
    bool equal = f1 == f2;
    bool degree_ok = f1.degree() == (15 * p - 5) / 2;
    out.push_back(make_entry("f2p-forms", Json{{"p", p}}, equal && degree_ok,
                             Json{{"degree", f1.degree()}, {"forms_equal", equal}},
                             t_f2p.ms()));

    Timer t_mult;
    auto mults = root_multiplicities(f1, ws.values);
    long sum = 0;
    int threes = 0, twos = 0, ones = 0;
    for (const auto& [v, mult] : mults) {
        sum += mult;
        if (mult == 3) ++threes;
        if (mult == 2) ++twos;
        if (mult == 1) ++ones;
    }
    bool pattern = sum == f1.degree() && threes == (p - 1) / 2 && twos == 2 * p - 1 &&
                   ones == 2 * p + 1;
    Json factor_table = Json::array();
    for (const auto& [v, mult] : mults)
        factor_table.push_back(Json{{"h", v.str()}, {"multiplicity", mult}});
    out.push_back(make_entry("root-multiplicities", Json{{"p", p}}, pattern,
                             Json{{"triple", threes}, {"double", twos}, {"simple", ones},
                                  {"total", sum}, {"factors", factor_table}},
                             t_mult.ms()));

    Timer t_ker;
    Poly kernel = ppoly(p);
    bool kernel_ok = kernel.degree() == 2 * p && kernel.leading() == Rational(1);
    for (long idx = 2L * p; idx <= 3L * p - 1 && kernel_ok; ++idx)
        kernel_ok = f1.eval(conformal_weight(p, 1, idx)).is_zero() &&
                    f1.eval(conformal_weight(p, 2, idx)).is_zero();
    out.push_back(make_entry("kernel-polynomial", Json{{"p", p}}, kernel_ok,
                             Json{{"degree", kernel.degree()}}, t_ker.ms()));

    Timer t_shape;
    Poly shape = singlet_relation_shape(p);
    bool shape_ok = shape.degree() == 3 * (2 * p - 1) && shape.leading() == Rational(1);
    out.push_back(make_entry("singlet-relation-shape", Json{{"p", p}}, shape_ok,
                             Json{{"degree", shape.degree()}}, t_shape.ms()));

    Timer t_jordan;
    auto blocks = jordan_blocks(p);
    int size3 = 0, size2 = 0;
    bool jordan_ok = center_reduce(f1, p).representative.is_zero();
    for (const auto& b : blocks) {
        if (b.size == 3) ++size3;
        if (b.size == 2) ++size2;
        jordan_ok = jordan_ok && center_nilpotency(b.h, p) == b.size;
    }
    jordan_ok = jordan_ok && size3 == (p - 1) / 2 && size2 == p;
    out.push_back(make_entry("jordan-blocks", Json{{"p", p}}, jordan_ok,
                             Json{{"size3", size3}, {"size2", size2},
                                  {"blocks", json_of(blocks)}},
                             t_jordan.ms()));
    return out;
}

std::vector<CheckEntry> checks_recursion_oracle(unsigned workers) {
    // Eq. (main) on brute values for n = 1, both p, all pole orders up to
    // pn+4 and every insertion index; the m = 2n+1 slot checks Eq. (link).
    std::vector<CheckEntry> out;
    OracleOptions opts;
    opts.workers = workers;
    for (int p : {1, 3}) {
        Timer timer;
        bool ok = true;
        for (long i = p + 1; i <= p + 4 && ok; ++i) {
            for (int m = 0; m <= 3 && ok; ++m) {
                if (m <= 2) {
                    // at the base pole order the m = 0 step degenerates:
                    // the identity then forces I_{m+1} = 0
                    try {
                        StepFactor f = step_factor(1, i, p, m);
                        Poly lhs =
                            brute_residue({1, i, p, m}, opts).value.scaled(f.denominator);
                        Poly rhs = brute_residue({1, i, p, m + 1}, opts).value * f.numerator;
                        ok = lhs == rhs;
                    } catch (const BaseCaseError&) {
                        ok = brute_residue({1, i, p, m + 1}, opts).value.is_zero();
                    }
                } else {
                    ok = brute_residue({1, i, p, 3}, opts).value ==
                         brute_residue({1, i - 1, p, 0}, opts).value;
                }
            }
        }
        out.push_back(make_entry("recursion-oracle-agreement", Json{{"n", 1}, {"p", p}}, ok,
                                 Json::object(), timer.ms()));
    }
    for (int p : {1, 3}) {
        Timer timer;
        Poly observed = brute_residue({1, p, p, 0}, opts).value;
        out.push_back({"pole-order-pn-observation", Json{{"n", 1}, {"p", p}, {"i", p}},
                       CheckStatus::finding,
                       Json{{"value", json_of(observed)}, {"observed_zero", observed.is_zero()}},
                       timer.ms()});
    }
    return out;
}

int run_suite(SuiteReport&& report, const GlobalOptions& global) {
    emit(report.to_json(), global);
    summarize(report);
    return report.failed() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for logarithmic Macdonald-Morris constant-term "
                 "identities, triplet-algebra characters and Zhu center data"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--json-out", global.json_out, "Also write the JSON result to this file");
    app.add_option("--workers", global.workers, "Worker threads (0 = auto, WLAB_WORKERS)");

    auto* ct = app.add_subcommand("ct", "Constant-term / residue computations");
    ct->fallthrough();
    ct->require_subcommand(1);

    int n = 1, p = 1, m = 0, k = 1;
    long i = 0;
    bool no_log = false;
    std::string t_value;

    auto* brute = ct->add_subcommand("brute", "Brute-force residue of the log kernel");
    brute->fallthrough();
    long ct_pole = 0;
    brute->add_option("--n", n, "Number of log pairs")->required();
    auto* i_opt = brute->add_option("--i", i, "Per-variable pole order (residue form)");
    brute->add_option("--ct-pole", ct_pole, "Constant-term pole order (equals i - 1)")
        ->excludes(i_opt);
    brute->add_option("--p", p, "Vandermonde power (odd)")->required();
    brute->add_option("--m", m, "Elementary-symmetric insertion index");
    brute->add_option("--t", t_value, "Evaluate at t instead of returning the polynomial");
    brute->add_flag("--no-log", no_log, "Drop the logarithm factors");

    auto* closed = ct->add_subcommand("closed", "Closed form via the pole-order recursion");
    closed->fallthrough();
    closed->add_option("--n", n, "Number of log pairs")->required();
    closed->add_option("--i", i, "Starting pole order")->required();
    closed->add_option("--p", p, "Vandermonde power (odd)")->required();
    std::string base_str;
    bool conjecture_base = false;
    closed->add_option("--base", base_str, "Base constant (rational) for the full value");
    closed->add_flag("--conjecture-base", conjecture_base,
                     "Take the base magnitude from the double-factorial formula "
                     "(requires p = 2m+1, m >= 1; sign undetermined)");

    long budget = 900;
    auto* verify = ct->add_subcommand("verify", "Check the closed form against the oracle");
    verify->fallthrough();
    verify->add_option("--k", k, "Number of log pairs")->required();
    verify->add_option("--p", p, "Vandermonde power (odd)")->required();
    verify->add_option("--budget", budget, "Oracle budget in seconds");

    auto* conj = app.add_subcommand("conjecture", "Logarithmic Dyson constant-term instances");
    conj->fallthrough();
    int conj_m = 1;
    conj->add_option("--k", k, "Number of log pairs")->required();
    conj->add_option("--m", conj_m, "Half the Vandermonde power: p = 2m+1")->required();
    conj->add_option("--budget", budget, "Oracle budget in seconds");

    auto* chars = app.add_subcommand("chars", "q-series characters");
    chars->fallthrough();
    chars->require_subcommand(1);
    long order = 50;
    int r = 1, s = 1;
    std::string what, norm_str;
    bool csv = false;
    auto* expand = chars->add_subcommand("expand", "Expand one series to a given order");
    expand->fallthrough();
    expand->add_option("--p", p, "Odd p >= 3")->required();
    expand->add_option("--order", order, "Truncation order");
    expand
        ->add_option("--what", what,
                     "eta|phi-inverse|theta|dtheta|ddtheta|virasoro|minmodel|x1+|x1-|x2+|x2-")
        ->required();
    expand->add_option("--r", r, "First index (theta subscript or Kac row)");
    expand->add_option("--s", s, "Second Kac index");
    expand->add_option("--k", k, "Triplet module index");
    expand->add_option("--norm", norm_str, "Theta derivative insertion normalization");
    expand->add_flag("--csv", csv, "Emit CSV (exponent,coefficient) instead of JSON");

    auto* chars_verify = chars->add_subcommand("verify", "Character identity suite");
    chars_verify->fallthrough();
    chars_verify->add_option("--p", p, "Odd p >= 3")->required();
    chars_verify->add_option("--order", order, "Truncation order");

    auto* closure = app.add_subcommand("closure", "Modular closure basis and exact rank");
    closure->fallthrough();
    closure->add_option("--p", p, "Odd p >= 3")->required();
    long closure_order = 200;
    closure->add_option("--order", closure_order, "Truncation order");

    auto* zhu = app.add_subcommand("zhu", "Zhu algebra polynomial suite");
    zhu->fallthrough();
    zhu->add_option("--p", p, "Odd p >= 3")->required();

    auto* report_cmd = app.add_subcommand("report", "Run the full verification suite");
    report_cmd->fallthrough();
    std::string config_path;
    long report_order = 0, report_closure_order = 0, report_budget = 0;
    report_cmd->add_option("--config", config_path, "Key-value config file");
    report_cmd->add_option("--order", report_order, "Override the q-series order");
    report_cmd->add_option("--closure-order", report_closure_order,
                           "Override the closure order");
    report_cmd->add_option("--budget", report_budget, "Override the oracle budget (seconds)");

    try {
        app.parse(argc, argv);

        if (brute->parsed()) {
            if (brute->count("--ct-pole"))
                i = ct_pole + 1;
            else if (!brute->count("--i"))
                throw UsageError("ct brute: one of --i or --ct-pole is required");
            ResidueParams params{n, i, p, m, !no_log};
            OracleOptions opts;
            opts.workers = global.workers;
            if (!t_value.empty()) {
                Rational t = Rational::parse(t_value);
                Rational value = brute_residue_at(params, t, opts);
                Json out;
                out["params"] = json_of(params);
                out["t"] = t.str();
                out["value"] = value.str();
                emit(out, global);
            } else {
                emit(json_of(brute_residue(params, opts)), global);
            }
            return 0;
        }
        if (closed->parsed()) {
            std::optional<Rational> base;
            BaseSource source = BaseSource::supplied;
            if (conjecture_base) {
                if (!base_str.empty())
                    throw UsageError("ct closed: --base and --conjecture-base are exclusive");
                if (p < 3)
                    throw UsageError("ct closed: the conjecture needs p = 2m+1 with m >= 1");
                base = conjectured_base_constant(n, (p - 1) / 2);
                source = BaseSource::conjecture;
            } else if (!base_str.empty()) {
                base = Rational::parse(base_str);
            }
            emit(json_of(closed_form(n, i, p, base, source)), global);
            return 0;
        }
        if (verify->parsed()) {
            SuiteReport report;
            report.entries.push_back(check_ct_verify(k, p, budget, global.workers));
            return run_suite(std::move(report), global);
        }
        if (conj->parsed()) {
            SuiteReport report;
            report.entries.push_back(check_conjecture(k, conj_m, budget, global.workers));
            return run_suite(std::move(report), global);
        }
        if (expand->parsed()) {
            Rational norm = norm_str.empty() ? Rational(4L * p) : Rational::parse(norm_str);
            QSeries series;
            if (what == "eta")
                series = eta(order);
            else if (what == "phi-inverse")
                series = phi_inverse(order);
            else if (what == "theta")
                series = theta(r, p, order);
            else if (what == "dtheta")
                series = dtheta(r, p, order, norm);
            else if (what == "ddtheta")
                series = ddtheta(r, p, order, norm);
            else if (what == "virasoro")
                series = virasoro_char(p, r, s, order);
            else if (what == "minmodel")
                series = minimal_model_char(p, r, order);
            else
                series = triplet_char_decomp(p, triplet_family_from_string(what), k, order);
            if (csv) {
                std::cout << qseries_csv(series);
                if (!global.json_out.empty()) {
                    std::ofstream out(global.json_out);
                    out << qseries_csv(series);
                }
            } else {
                emit(json_of(series), global);
            }
            return 0;
        }
        if (chars_verify->parsed()) {
            SuiteReport report;
            for (auto& e : checks_chars(p, order, {}))
                report.entries.push_back(std::move(e));
            return run_suite(std::move(report), global);
        }
        if (closure->parsed()) {
            SuiteReport report;
            for (auto& e : checks_closure(p, closure_order))
                report.entries.push_back(std::move(e));
            return run_suite(std::move(report), global);
        }
        if (zhu->parsed()) {
            SuiteReport report;
            for (auto& e : checks_zhu(p))
                report.entries.push_back(std::move(e));
            WeightSet ws = weight_set(p);
            std::cerr << "S_{2," << p << "} (" << ws.values.size() << " distinct weights):\n";
            for (const auto& e : ws.entries)
                std::cerr << "  h_{" << e.label.s << "," << e.label.index
                          << "} = " << e.value.str() << "\n";
            std::cerr << "f_{2," << p << "} factors (value^multiplicity):\n";
            for (const auto& [v, mult] : root_multiplicities(f2p(p, 1), ws.values))
                std::cerr << "  (x - " << v.str() << ")^" << mult << "\n";
            std::cerr << "Jordan blocks:\n";
            for (const auto& b : jordan_blocks(p))
                std::cerr << "  h_{" << b.label.s << "," << b.label.index << "} = "
                          << b.h.str() << "  size " << b.size << "\n";
            return run_suite(std::move(report), global);
        }
        if (report_cmd->parsed()) {
            RunConfig config;
            if (!config_path.empty())
                config = parse_config_file(config_path);
            if (global.workers > 0)
                config.worker_count = global.workers;
            if (report_order > 0)
                config.q_order = report_order;
            if (report_closure_order > 0)
                config.closure_order = report_closure_order;
            if (report_budget > 0)
                config.oracle_budget_seconds = report_budget;
            SuiteReport report;
            for (auto& e : checks_recursion_oracle(config.worker_count))
                report.entries.push_back(std::move(e));
            for (int pv : config.p_list) {
                report.entries.push_back(
                    check_ct_verify(1, pv, config.oracle_budget_seconds, config.worker_count));
                for (auto& e : checks_zhu(pv))
                    report.entries.push_back(std::move(e));
                for (auto& e : checks_chars(pv, config.q_order, config.theta_normalizations))
                    report.entries.push_back(std::move(e));
                for (auto& e : checks_closure(pv, config.closure_order))
                    report.entries.push_back(std::move(e));
            }
            for (auto [ck, cm] : {std::pair{1, 1}, {1, 2}, {2, 1}})
                report.entries.push_back(
                    check_conjecture(ck, cm, config.oracle_budget_seconds, config.worker_count));
            return run_suite(std::move(report), global);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
