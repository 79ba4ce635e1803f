#include "wreathlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "wreathlab/products.hpp"
#include "wreathlab/series.hpp"
#include "wreathlab/spectral.hpp"

namespace wreathlab {

using nlohmann::json;

namespace {

std::vector<int> parse_group_spec(const std::string& spec) {
    std::vector<int> orders;
    size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'C' && spec[pos] != 'c')
            throw invalid_input("group spec must look like C2 or C2xC2: " + spec);
        ++pos;
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) throw invalid_input("missing cyclic order in group spec: " + spec);
        orders.push_back(std::stoi(spec.substr(start, pos - start)));
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X')
                throw invalid_input("bad separator in group spec: " + spec);
            ++pos;
        }
    }
    if (orders.empty()) throw invalid_input("empty group spec");
    return orders;
}

// Smallest integer E with |x| <= 10^E (E may be negative); 0 for x = 0.
int decimal_exponent_upper(const Rational& x) {
    Rational mag = abs(x);
    if (mag == 0) return 0;
    int e = 0;
    Rational t = mag;
    while (t > 1) { t /= 10; ++e; }
    while (t <= Rational(1, 10)) { t *= 10; --e; }
    return e;
}

json ball_json(const Ball& b, int digits) {
    return json{{"center_decimal", b.center_decimal(digits)},
                {"radius_decimal", b.radius_decimal(digits)},
                {"prec_bits", b.prec_bits()}};
}

json cyclotomic_json(const CyclotomicNumber& value) {
    json coeffs = json::array();
    for (const auto& c : value.coefficients()) coeffs.push_back(to_fraction_string(c));
    return json{{"N", value.root_order()}, {"coeffs", coeffs}};
}

json element_list_json(const FagRingQ& e) {
    json out = json::array();
    for (const auto& [elem, coeff] : e.terms())
        out.push_back({{"element", e.group()->elem_to_string(elem)},
                       {"coeff", to_fraction_string(coeff)}});
    return out;
}

struct SpectrumArgs {
    std::string group = "C2";
    std::string projection = "avg";
    std::string mu;
    bool verify = false;
    int nmax = 4;
    int completeness_n = 20;
};

json run_spectrum(const SpectrumArgs& a, std::string& human, bool& check_failed) {
    SpectralSetup setup = [&] {
        if (a.projection == "avg") {
            auto U = std::make_shared<const FiniteAbelianGroup>(parse_group_spec(a.group));
            return average_setup(U);
        }
        if (a.projection.rfind("trace:", 0) == 0) {
            auto cert = projection_with_trace(parse_rational(a.projection.substr(6)));
            return make_setup(cert.e.group(), cert.e);
        }
        throw invalid_input("projection spec must be 'avg' or 'trace:m/n'");
    }();

    json payload;
    payload["U"] = a.group;
    payload["W"] = to_fraction_string(setup.W);
    std::ostringstream text;
    text << "W = " << to_fraction_string(setup.W) << "\n";

    if (!a.mu.empty()) {
        json atom;
        if (a.mu.rfind("rot:", 0) == 0) {
            Rational rot = parse_rational(a.mu.substr(4));
            Integer num = rot.get_num(), den = rot.get_den();
            if (rot <= 0 || rot >= 1 || den > 1000000)
                throw invalid_input("rotation must be m/n in (0,1) with small n");
            int m = static_cast<int>(num.get_si());
            int n = static_cast<int>(den.get_si());
            Rational mass = atom_mass(setup.W, n);
            atom = {{"m", m},
                    {"n", n},
                    {"lambda_decimal", std::to_string(two_cos_exact(m, n).to_double())},
                    {"mass", to_fraction_string(mass)},
                    {"mass_decimal", to_decimal_string(mass, 12)}};
            payload["recognized"] = true;
            text << "atom at 2cos(" << m << "*pi/" << n << "): mass "
                 << to_fraction_string(mass) << "\n";
        } else {
            AtomLookup lookup = recognize_atom(setup.W, parse_rational(a.mu));
            payload["recognized"] = lookup.recognized;
            if (lookup.recognized) {
                atom = {{"m", lookup.m},
                        {"n", lookup.n},
                        {"lambda_decimal", a.mu},
                        {"mass", to_fraction_string(lookup.mass)},
                        {"mass_decimal", to_decimal_string(lookup.mass, 12)}};
                text << "recognized as rotation " << lookup.m << "/" << lookup.n
                     << ": mass " << to_fraction_string(lookup.mass) << "\n";
            } else {
                atom = {{"mass", "0/1"}, {"mass_decimal", "0"}};
                text << "mu not recognized as an atom (mass 0)\n";
            }
        }
        payload["atom"] = atom;
    } else {
        json atoms = json::array();
        for (const auto& at : atoms_up_to(setup.W, a.nmax))
            atoms.push_back({{"m", at.m},
                             {"n", at.n},
                             {"lambda_decimal", std::to_string(at.lambda.to_double())},
                             {"lambda", cyclotomic_json(at.lambda)},
                             {"mass", to_fraction_string(at.mass)},
                             {"mass_decimal", to_decimal_string(at.mass, 12)}});
        payload["atoms"] = atoms;
        text << "listed " << atoms.size() << " atoms with n <= " << a.nmax << "\n";
    }

    Rational partial = mass_partial_sum(setup.W, a.completeness_n);
    Rational tail = mass_tail(setup.W, a.completeness_n);
    payload["completeness"] = {{"N", a.completeness_n},
                               {"partial", to_fraction_string(partial)},
                               {"partial_decimal", to_decimal_string(partial, 12)},
                               {"tail", to_fraction_string(tail)},
                               {"tail_decimal", to_decimal_string(tail, 12)},
                               {"sums_to_one", partial + tail == 1}};
    text << "mass through n=" << a.completeness_n << ": " << to_fraction_string(partial)
         << " (tail " << to_fraction_string(tail) << ")\n";

    if (a.verify) {
        json checks;
        checks["interval_orthogonality"] = check_interval_orthogonality(setup, a.nmax);
        bool action = true, traces = true, eigen_rel = true;
        for (int n = 2; n <= a.nmax; ++n) {
            action = action && check_shift_action(setup, n);
            WreathRingQ q = interval_projection(setup, n);
            traces = traces && q.is_projection() &&
                     Rational(q.trace()) ==
                         (setup.W - 1) * (setup.W - 1) /
                             rational_pow(setup.W, static_cast<unsigned long>(n));
            for (int m = 1; m < n; ++m) {
                WreathRingC p = eigenspace_projection(setup, m, n);
                WreathRingC Tp = promote(setup.T) * p;
                eigen_rel = eigen_rel && Tp == p.scaled(two_cos_exact(m, n)) &&
                            p.trace() == CyclotomicNumber(Rational(q.trace()));
            }
        }
        checks["shift_action"] = action;
        checks["interval_traces"] = traces;
        checks["eigen_relation"] = eigen_rel;
        checks["eigen_orthogonality"] = check_eigen_orthogonality(setup, a.nmax);
        checks["determinant_identity"] = check_determinant_identity(std::max(8, a.nmax));
        payload["checks"] = checks;
        for (auto it = checks.begin(); it != checks.end(); ++it) {
            text << "check " << it.key() << ": " << (it.value().get<bool>() ? "ok" : "FAILED")
                 << "\n";
            if (!it.value().get<bool>()) check_failed = true;
        }
    }
    human = text.str();
    return payload;
}

json run_kappa(const Rational& p, const Rational& q, int digits, const std::string& bound_text,
               long fixed_terms, std::string& human, bool& check_failed) {
    KappaParams params{p, q, digits};
    KappaReport report = fixed_terms > 0 ? kappa_partial(params, fixed_terms)
                                         : kappa_evaluate(params);
    json out;
    out["p"] = to_fraction_string(p);
    out["q"] = to_fraction_string(q);
    out["digits"] = digits;
    std::string lo_trunc = to_decimal_string(report.value.lower(), digits, Rounding::Down);
    std::string hi_trunc = to_decimal_string(report.value.upper(), digits, Rounding::Down);
    bool digits_certified = lo_trunc == hi_trunc;
    out["value"] = digits_certified ? lo_trunc : report.value.center_decimal(digits);
    out["digits_certified"] = digits_certified;
    out["value_ball"] = ball_json(report.value, digits + 4);
    out["terms_used"] = report.terms_used;
    out["tail_exp"] = decimal_exponent_upper(report.tail_bound.upper());
    json cf_terms = json::array();
    for (const auto& t : report.cf.terms) cf_terms.push_back(t.get_str());
    out["cf_terms"] = cf_terms;
    out["cf_certified"] = report.cf.certified();
    out["largest_convergent_denominator"] = report.min_denominator_witness.get_str();

    std::ostringstream text;
    text << "kappa(" << to_fraction_string(p) << ", " << to_fraction_string(q)
         << ") = " << out["value"].get<std::string>() << "\n";
    text << "terms " << report.terms_used << ", tail <= 10^" << out["tail_exp"].get<int>()
         << ", cf terms certified " << report.cf.certified() << "\n";

    if (!bound_text.empty()) {
        Integer bound = parse_magnitude(bound_text);
        RationalityVerdict verdict = probe_rationality(report, bound);
        out["verdict"] = {{"statement", verdict.statement},
                          {"exact_rational", verdict.exact_rational},
                          {"denominator_exceeds_bound", verdict.denominator_exceeds_bound},
                          {"bound", bound.get_str()},
                          {"certified_terms", verdict.certified_terms},
                          {"largest_denominator", verdict.largest_denominator.get_str()}};
        text << "rationality probe: " << verdict.statement << "\n";
        if (!verdict.exact_rational && !verdict.denominator_exceeds_bound) check_failed = true;
    }
    human = text.str();
    return json{{"kappa", out}};
}

json run_dimker(const Rational& X, const Rational& Y, int trunc, int digits,
                std::string& human, bool& check_failed) {
    DimKerResult d = dim_ker_difference(X, Y, trunc);
    KappaParams params{1 / X, 1 / Y, digits};
    KappaReport single = kappa_evaluate(params);
    Ball double_interval =
        Ball::from_endpoints(d.partial, d.partial + d.tail.upper(), single.value.prec_bits());
    bool intersect = double_interval.intersects(single.value);
    if (!intersect) check_failed = true;
    json out;
    out["X"] = to_fraction_string(X);
    out["Y"] = to_fraction_string(Y);
    out["trunc"] = trunc;
    out["partial"] = to_fraction_string(d.partial);
    out["partial_decimal"] = to_decimal_string(d.partial, digits);
    out["tail_upper_exp"] = decimal_exponent_upper(d.tail.upper());
    out["single_sum"] = {{"digits", digits},
                         {"value_ball", ball_json(single.value, digits)},
                         {"terms_used", single.terms_used}};
    out["intervals_intersect"] = intersect;
    std::ostringstream text;
    text << "double sum through " << trunc << ": " << to_decimal_string(d.partial, digits)
         << " + tail(10^" << out["tail_upper_exp"].get<int>() << ")\n";
    text << "single sum: " << single.value.center_decimal(digits) << "\n";
    text << "intervals intersect: " << (intersect ? "yes" : "NO") << "\n";
    human = text.str();
    return json{{"dimker", out}};
}

json run_projection(const Rational& q, std::string& human, bool& check_failed) {
    TraceProjectionCertificate cert = projection_with_trace(q);
    bool proj_ok = cert.e.is_projection();
    bool trace_ok = Rational(cert.e.trace()) == q;
    bool integral_ok = has_integral_multiple(cert.e, cert.n);
    bool decomposition_ok = cert.a + (cert.s - 1) * cert.b == cert.m;
    if (!(proj_ok && trace_ok && integral_ok && decomposition_ok)) check_failed = true;
    json out;
    out["q"] = to_fraction_string(q);
    out["m"] = cert.m.get_str();
    out["n"] = cert.n.get_str();
    out["r"] = cert.r;
    out["s"] = cert.s.get_str();
    out["a"] = cert.a.get_str();
    out["b"] = cert.b.get_str();
    out["e"] = element_list_json(cert.e);
    out["checks"] = {{"is_projection", proj_ok},
                     {"trace_matches", trace_ok},
                     {"integral_multiple", integral_ok},
                     {"decomposition", decomposition_ok}};
    std::ostringstream text;
    text << "projection with trace " << to_fraction_string(q) << " in Q[C_"
         << cert.n.get_str() << "], support " << cert.e.support_size() << "\n";
    text << "checks: projection " << (proj_ok ? "ok" : "FAILED") << ", trace "
         << (trace_ok ? "ok" : "FAILED") << ", n*e integral "
         << (integral_ok ? "ok" : "FAILED") << "\n";
    human = text.str();
    return json{{"projection", out}};
}

json run_series(int K, std::string& human, bool& check_failed) {
    bool diag = check_diagonal_identity(K);
    bool gcd_id = check_gcd_coefficient_identity(std::min(K, 100));
    BivariateSeries series = gcd_series(K);
    bool symmetric = true;
    for (int i = 1; i <= K && symmetric; ++i)
        for (int j = i; j <= K && symmetric; ++j)
            symmetric = series.at(i, j) == series.at(j, i);
    if (!(diag && gcd_id && symmetric)) check_failed = true;
    json out = {{"K", K},
                {"diagonal_identity", diag},
                {"gcd_phi_identity", gcd_id},
                {"symmetric", symmetric}};
    std::ostringstream text;
    text << "series checks through K=" << K << ": diagonal "
         << (diag ? "ok" : "FAILED") << ", gcd/phi " << (gcd_id ? "ok" : "FAILED")
         << ", symmetry " << (symmetric ? "ok" : "FAILED") << "\n";
    human = text.str();
    return json{{"series", out}};
}

json run_gaps(long Q, int N, const FactorOptions& opt, std::string& human) {
    DominanceWitness w = dominance_witness(Q, N, opt);
    json ratios, dominated, z, omega;
    for (size_t i = 0; i < w.check.entries.size(); ++i) {
        const auto& entry = w.check.entries[i];
        std::string key = (entry.offset > 0 ? "+" : "") + std::to_string(entry.offset);
        ratios[key] = to_fraction_string(entry.ratio);
        dominated[key] = entry.dominated;
        z[key] = w.tail_factor_counts[i];
        omega[key] = w.omega[i];
    }
    json out = {{"Q", w.Q},
                {"N", w.N},
                {"mQ", w.m_Q.get_str()},
                {"a_mQ", w.check.a_m.get_str()},
                {"ratios", ratios},
                {"dominated", dominated},
                {"allPass", w.check.all_dominated},
                {"max_ratio", to_fraction_string(w.check.max_ratio)},
                {"z", z},
                {"Omega", omega}};
    std::ostringstream text;
    text << "m_Q = " << w.m_Q.get_str() << ", a(m_Q) = " << w.check.a_m.get_str() << "\n";
    text << "all neighbors dominated: " << (w.check.all_dominated ? "yes" : "no")
         << ", max ratio " << to_fraction_string(w.check.max_ratio) << "\n";
    human = text.str();
    return json{{"gaps", out}};
}

json run_check_all(const FactorOptions& opt, std::string& human, bool& check_failed) {
    json checks;
    auto record = [&](const std::string& name, bool ok) {
        checks[name] = ok;
        if (!ok) check_failed = true;
    };
    record("determinant_identity_n12", check_determinant_identity(12));
    {
        bool ortho = true, eigen = true;
        for (int n = 2; n <= 8; ++n) {
            for (int m = 1; m < n; ++m) {
                eigen = eigen && check_tridiagonal_eigen_relation(m, n);
                for (int m2 = 1; m2 < n; ++m2) {
                    Rational expect = m == m2 ? frac(n, 2) : Rational(0);
                    ortho = ortho && sine_inner_product(m, m2, n) == expect;
                }
            }
        }
        record("sine_orthogonality_n8", ortho);
        record("sine_eigen_relation_n8", eigen);
    }
    for (const auto& [label, orders] :
         {std::pair<std::string, std::vector<int>>{"C2", {2}}, {"C3", {3}}}) {
        auto U = std::make_shared<const FiniteAbelianGroup>(orders);
        SpectralSetup s = average_setup(U);
        int nmax = orders[0] == 2 ? 4 : 3;
        record("interval_orthogonality_" + label, check_interval_orthogonality(s, nmax));
        bool action = true;
        for (int n = 2; n <= nmax; ++n) action = action && check_shift_action(s, n);
        record("shift_action_" + label, action);
        record("eigen_orthogonality_" + label, check_eigen_orthogonality(s, nmax));
    }
    record("atom_mass_W2_n2", atom_mass(Rational(2), 2) == Rational(1, 3));
    record("atom_mass_W2_n3", atom_mass(Rational(2), 3) == Rational(1, 7));
    record("completeness_W2_N20",
           mass_partial_sum(Rational(2), 20) == 1 - Rational(21, 1048576));
    record("series_checks", check_diagonal_identity(50) && check_gcd_coefficient_identity(50));
    {
        bool sweep = true;
        for (long n : {1L, 2L, 4L, 8L, 16L, 6L, 12L, 20L, 24L}) {
            for (long m = 0; m <= n && sweep; ++m) {
                Rational q(m, n);
                q.canonicalize();
                auto cert = projection_with_trace(q);
                sweep = cert.e.is_projection() && Rational(cert.e.trace()) == q &&
                        has_integral_multiple(cert.e, cert.n);
            }
        }
        record("trace_projection_sweep_n24", sweep);
    }
    {
        auto kappa = kappa_evaluate({Rational(1, 2), Rational(1, 2), 12});
        record("kappa_half_half_10_digits",
               to_decimal_string(kappa.value.lower(), 10, Rounding::Down) == "0.1659457149" &&
                   to_decimal_string(kappa.value.upper(), 10, Rounding::Down) == "0.1659457149");
    }
    {
        auto w1 = dominance_witness(1, 2, opt);
        auto w4 = dominance_witness(4, 2, opt);
        record("dominance_trend_Q4_below_Q1", w4.check.max_ratio < w1.check.max_ratio);
    }
    {
        auto pi = check_prime_inequalities(20);
        record("prime_inequalities_Q20",
               pi.factorial_ok && pi.prime_count_ok && pi.mertens_ok);
    }
    std::ostringstream text;
    for (auto it = checks.begin(); it != checks.end(); ++it)
        text << (it.value().get<bool>() ? "ok      " : "FAILED  ") << it.key() << "\n";
    human = text.str();
    return json{{"checks", checks}};
}

} // namespace

int CommandResult::exit_code() const {
    switch (status) {
        case CommandStatus::Ok: return 0;
        case CommandStatus::CheckFailed: return 1;
        case CommandStatus::InvalidInput: return 2;
        case CommandStatus::BudgetExceeded: return 3;
    }
    return 4;
}

std::string CommandResult::status_string() const {
    switch (status) {
        case CommandStatus::Ok: return "ok";
        case CommandStatus::CheckFailed: return "check-failed";
        case CommandStatus::InvalidInput: return "invalid-input";
        case CommandStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

std::string CommandResult::to_json() const {
    json out = {{"schema", "1"},
                {"command", command},
                {"status", status_string()},
                {"payload", payload_json.empty() ? json::object() : json::parse(payload_json)}};
    return out.dump(2);
}

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    CLI::App app{"exact spectral computations in wreath product group rings"};
    app.require_subcommand(1);
    bool json_flag = false;
    unsigned long seed = 1;
    unsigned long long budget = 10'000'000;
    app.add_flag("--json", json_flag, "emit machine-readable JSON");
    app.add_option("--seed", seed, "seed for randomized factorization restarts");
    app.add_option("--budget", budget, "iteration budget for factorization");

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "atom masses and exact identity checks");
    spectrum->add_option("--U", spectrum_args.group, "base group, e.g. C2 or C2xC2");
    spectrum->add_option("--e", spectrum_args.projection, "projection: avg or trace:m/n");
    spectrum->add_option("--mu", spectrum_args.mu, "eigenvalue: rot:m/n or a decimal");
    spectrum->add_flag("--verify", spectrum_args.verify, "run the exact identity suite");
    spectrum->add_option("--nmax", spectrum_args.nmax, "index cap for checks and listings");
    spectrum->add_option("--completeness", spectrum_args.completeness_n,
                         "partial-sum depth for the mass total");

    std::string kp = "1/2", kq = "1/2", bound_text;
    int kdigits = 30;
    long kterms = 0;
    auto* kappa = app.add_subcommand("kappa", "certified kappa(p,q) evaluation");
    kappa->add_option("--p", kp, "first trace in (0,1)");
    kappa->add_option("--q", kq, "second trace in (0,1)");
    kappa->add_option("--digits", kdigits, "certified decimal digits");
    kappa->add_option("--bound", bound_text, "rationality probe bound, e.g. 1e100");
    kappa->add_option("--terms", kterms, "fixed series truncation (otherwise automatic)");

    std::string dx = "2", dy = "2";
    int dtrunc = 200, ddigits = 30;
    auto* dimker = app.add_subcommand("dimker", "double-sum kernel dimension cross-check");
    dimker->add_option("--X", dx, "X > 1");
    dimker->add_option("--Y", dy, "Y > 1");
    dimker->add_option("--trunc", dtrunc, "double-sum truncation");
    dimker->add_option("--digits", ddigits, "single-sum certified digits");

    std::string proj_q = "1/2";
    auto* projection = app.add_subcommand("projection", "projection with prescribed trace");
    projection->add_option("--q", proj_q, "trace in [0,1]");

    int series_k = 50;
    auto* series = app.add_subcommand("series", "power series identity checks");
    series->add_option("--K", series_k, "truncation order");

    long gaps_q = 2;
    int gaps_n = 2;
    auto* gaps = app.add_subcommand("gaps", "coefficient dominance witness report");
    gaps->add_option("--Q", gaps_q, "prime count in the witness integer");
    gaps->add_option("--N", gaps_n, "neighborhood radius");

    auto* check_all = app.add_subcommand("check-all", "run the default verification sweep");
    for (auto* sub : {spectrum, kappa, dimker, projection, series, gaps, check_all})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.command = "help";
        result.human_text = app.help();
        return result;
    } catch (const CLI::ParseError& err) {
        result.command = "parse";
        result.status = CommandStatus::InvalidInput;
        result.human_text = std::string("argument error: ") + err.what();
        result.payload_json = json{{"error", err.what()}}.dump();
        return result;
    }

    FactorOptions opt{seed, budget};
    bool check_failed = false;
    try {
        json payload;
        if (spectrum->parsed()) {
            result.command = "spectrum";
            payload = run_spectrum(spectrum_args, result.human_text, check_failed);
        } else if (kappa->parsed()) {
            result.command = "kappa";
            payload = run_kappa(parse_rational(kp), parse_rational(kq), kdigits, bound_text,
                                kterms, result.human_text, check_failed);
        } else if (dimker->parsed()) {
            result.command = "dimker";
            payload = run_dimker(parse_rational(dx), parse_rational(dy), dtrunc, ddigits,
                                 result.human_text, check_failed);
        } else if (projection->parsed()) {
            result.command = "projection";
            payload = run_projection(parse_rational(proj_q), result.human_text, check_failed);
        } else if (series->parsed()) {
            result.command = "series";
            payload = run_series(series_k, result.human_text, check_failed);
        } else if (gaps->parsed()) {
            result.command = "gaps";
            payload = run_gaps(gaps_q, gaps_n, opt, result.human_text);
        } else if (check_all->parsed()) {
            result.command = "check-all";
            payload = run_check_all(opt, result.human_text, check_failed);
        }
        result.payload_json = payload.dump();
        result.status = check_failed ? CommandStatus::CheckFailed : CommandStatus::Ok;
    } catch (const invalid_input& err) {
        result.status = CommandStatus::InvalidInput;
        result.human_text = std::string("invalid input: ") + err.what();
        result.payload_json = json{{"error", err.what()}}.dump();
    } catch (const budget_exceeded& err) {
        result.status = CommandStatus::BudgetExceeded;
        result.human_text = std::string("budget exceeded: ") + err.what();
        result.payload_json = json{{"error", err.what()}}.dump();
    } catch (const needs_more_digits& err) {
        result.status = CommandStatus::InvalidInput;
        result.human_text = std::string("needs more digits: ") + err.what();
        result.payload_json = json{{"error", err.what()}}.dump();
    }
    return result;
}

} // namespace wreathlab
