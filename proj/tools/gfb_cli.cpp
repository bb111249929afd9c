// Command-line front end: laws, flow sampling, finite-N triangulation,
// metric reconstruction, profile immersion, and the validation suites.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfb/curved_trig.hpp"
#include "gfb/curvature_field.hpp"
#include "gfb/embeddings.hpp"
#include "gfb/fnc.hpp"
#include "gfb/fundamental_solution.hpp"
#include "gfb/integration.hpp"
#include "gfb/triangulation.hpp"

using namespace gfb;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------- plumbing

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Canonical config string -> hash comment; identical configs give
// byte-identical files.
void emit(const Table& t, const std::string& config, const std::string& out,
          const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j;
        char hash[24];
        std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(config));
        j["config_hash"] = hash;
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        os << j.dump(2) << "\n";
    } else {
        os << "# config-hash: ";
        char hash[24];
        std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(config));
        os << hash << "\n";
        for (size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i)
                os << (i ? "," : "") << fmt17(r[i]);
            os << "\n";
        }
    }
    if (out.empty()) {
        std::fputs(os.str().c_str(), stdout);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw DomainError("cannot open output file: " + out);
        f << os.str();
    }
}

struct FieldOpts {
    std::string name = "constant";
    std::vector<std::string> params;
};

void add_field_opts(CLI::App* cmd, FieldOpts& fo) {
    cmd->add_option("--field", fo.name,
                    "constant|inverse_l|wave|lambert_hill")
        ->default_val("constant");
    cmd->add_option("--field-param", fo.params,
                    "field parameter k=v (repeatable)");
}

field::CurvatureField make_field(const FieldOpts& fo) {
    std::map<std::string, double> p;
    for (const auto& kv : fo.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw DomainError("--field-param expects k=v, got: " + kv);
        p[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    auto get = [&](const std::string& k, double dflt) {
        const auto it = p.find(k);
        return it == p.end() ? dflt : it->second;
    };
    if (fo.name == "constant") return field::make_constant(get("K0", 1.0));
    if (fo.name == "inverse_l") return field::make_inverse_l();
    if (fo.name == "wave")
        return field::make_wave(get("kappa", 1.0), get("omega", 1.0),
                                get("t", 0.0));
    if (fo.name == "lambert_hill") return field::make_lambert_hill();
    throw DomainError("unknown field: " + fo.name);
}

std::string config_string(const CLI::App* cmd) {
    std::ostringstream os;
    os << cmd->get_name();
    for (const auto* opt : cmd->get_options()) {
        // The output path and config file are not part of the data-producing
        // configuration; identical runs must hash identically.
        if (opt->get_name() == "--config" || opt->get_name() == "--out")
            continue;
        for (const auto& v : opt->results())
            os << " " << opt->get_name() << "=" << v;
    }
    return os.str();
}

// ---------------------------------------------------------------- commands

int cmd_laws(double K, double gamma, double a, double b,
             const std::string& branch) {
    const double tol = 1e-12;
    if (std::abs(std::sin(gamma)) < tol)
        throw DomainError("laws: gamma must not be a multiple of pi");
    const auto br = branch == "side" ? trig::Branch::side
                                     : trig::Branch::principal;
    const double c = trig::law_c(K, gamma, a, b);
    const double al = trig::law_sc(K, gamma, a, b, br);
    const double flat =
        std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(gamma));
    std::printf("c      = %.17g\n", c);
    std::printf("alpha  = %.17g\n", al);
    std::printf("flat c = %.17g (difference %.3e)\n", flat, c - flat);
    trig::ExpansionInputs in{{a, 0, 0}, {b, 0, 0}, gamma, {0, 0}, K};
    const auto cc = trig::c_expand(in);
    const auto aa = trig::sc_expand(in, br);
    std::printf("c series     = [%.17g, %.17g, %.17g]\n", cc[0], cc[1], cc[2]);
    std::printf("alpha series = [%.17g, %.17g, %.17g]\n", aa[0], aa[1], aa[2]);
    return 0;
}

int cmd_flow(const FieldOpts& fo, std::vector<double> base_l,
             std::vector<double> base_phi, std::vector<double> betas,
             double lambda_max, int n, double tol, bool unsafe,
             const std::string& out, const std::string& format,
             const std::string& config) {
    const auto K = make_field(fo);
    if (base_l.empty()) base_l = {0.3};
    if (betas.empty()) betas = {kPi / 4.0};
    while (base_phi.size() < base_l.size())
        base_phi.push_back(base_phi.empty() ? 0.0 : base_phi.back());
    if (n < 1) throw DomainError("flow: --n must be positive");
    Table t;
    t.columns = {"base_l", "base_phi", "beta", "lambda", "l", "phi", "x", "y"};
    for (size_t bi = 0; bi < base_l.size(); ++bi)
        for (double beta : betas)
            for (int k = 0; k <= n; ++k) {
                const double lam = lambda_max * k / n;
                const auto s = fsol::geodesic_sample(
                    K, {base_l[bi], base_phi[bi]}, beta, lam, unsafe, tol);
                t.rows.push_back({base_l[bi], base_phi[bi], beta, lam, s.l,
                                  s.phi, s.l * std::cos(s.phi),
                                  s.l * std::sin(s.phi)});
            }
    emit(t, config, out, format);
    return 0;
}

int cmd_triangulate(const FieldOpts& fo, double a, double c, double beta,
                    int N, double tol, const std::string& out,
                    const std::string& format, const std::string& config) {
    const auto K = make_field(fo);
    const fsol::TriangleSpec spec{a, c, beta};
    const auto r = tri::triangulate(K, spec, N);
    const double lb2 = fsol::top_line_b2(K, spec, tol);
    const double lg2 = fsol::top_angle_gamma2(K, spec, tol);
    const double la2 = fsol::opening_angle_alpha2(K, spec, tol);
    std::printf("zeroth: b0 = %.17g, alpha0 = %.17g, gamma0 = %.17g\n",
                r.zeroth.b0, r.zeroth.alpha0, r.zeroth.gamma0);
    std::printf("finite-N (N=%d): b2 = %.17g, gamma2 = %.17g, alpha2 = %.17g\n",
                N, r.b2, r.gamma2, r.alpha2);
    std::printf("limit:           b2 = %.17g, gamma2 = %.17g, alpha2 = %.17g\n",
                lb2, lg2, la2);
    std::printf("difference:      %.3e, %.3e, %.3e\n", r.b2 - lb2,
                r.gamma2 - lg2, r.alpha2 - la2);
    // Max delta residual across slices (recursion self-consistency).
    double worst = 0.0;
    const double sb = std::sin(beta);
    for (int j = 1; j <= N; ++j) {
        const auto s = tri::substitutes(N, j, a, c, beta);
        const double ang = std::asin(std::min(1.0, (j - 1.0) * a * sb / s.Yjm1));
        std::vector<double> Ks(N + 1, 0.0);
        for (int i = 1; i <= N; ++i) Ks[i] = K((i - 1.0) * s.c0 / N, ang);
        const auto a3 = tri::rib_lines(s, Ks);
        for (int i = 2; i <= N - 1; ++i)
            worst = std::max(worst, std::abs(tri::delta_residual(s, Ks, a3, i)));
    }
    std::printf("max delta residual: %.3e\n", worst);
    Table t;
    t.columns = {"j", "i", "x", "y"};
    for (int j = 0; j <= N; ++j)
        for (size_t i = 0; i < r.grid[j].size(); ++i)
            t.rows.push_back({double(j), double(i), r.grid[j][i].x,
                              r.grid[j][i].y});
    emit(t, config, out, format);
    return 0;
}

int cmd_metric(const FieldOpts& fo, double base_l, double base_phi,
               const std::string& out, const std::string& format,
               const std::string& config) {
    const auto K = make_field(fo);
    const auto m = fnc::metric_from_solution(K, base_l, base_phi);
    auto profile = [&](double l) {
        return fnc::metric_from_solution(K, l, base_phi).g_phiphi;
    };
    const double k_rt = fnc::gauss_from_metric(profile, base_l);
    std::printf("g_ll         = %.17g\n", m.g_ll);
    std::printf("g_phiphi     = %.17g\n", m.g_phiphi);
    std::printf("g_thetatheta = %.17g\n", m.g_thetatheta);
    std::printf("K round trip = %.17g (field: %.17g)\n", k_rt,
                K(base_l, base_phi));
    if (!out.empty()) {
        Table t;
        t.columns = {"base_l", "base_phi", "g_ll", "g_phiphi", "g_thetatheta",
                     "K_roundtrip", "K_field"};
        t.rows.push_back({base_l, base_phi, m.g_ll, m.g_phiphi,
                          m.g_thetatheta, k_rt, K(base_l, base_phi)});
        emit(t, config, out, format);
    }
    return 0;
}

int cmd_immerse(const std::string& relation, double r_max, int n,
                double tol, const std::string& out, const std::string& format,
                const std::string& config) {
    const auto rel = relation == "flat" ? embed::flat_relation()
                                        : embed::lambert_relation();
    if (n < 1 || r_max <= 0.0) throw DomainError("immerse: need n >= 1, r_max > 0");
    const embed::Profile prof(rel, r_max, tol);
    Table t;
    t.columns = {"r", "phi", "x", "y", "z"};
    for (int i = 0; i <= n; ++i) {
        const double r = r_max * i / n;
        for (int k = 0; k < 2 * n; ++k) {
            const double phi = kPi * k / n;
            const auto v = embed::immerse(prof, r, phi);
            t.rows.push_back({r, phi, v.x, v.y, v.z});
        }
    }
    emit(t, config, out, format);
    return 0;
}

// ---------------------------------------------------------------- validate

double b2_cf(double K, double a, double c, double beta) {
    const double y = std::sqrt(a * a + c * c + 2.0 * a * c * std::cos(beta));
    const double s = std::sin(beta);
    return -K * a * a * c * c * s * s / (6.0 * y);
}
double g2_cf(double K, double a, double c, double beta) {
    const double y2 = a * a + c * c + 2.0 * a * c * std::cos(beta);
    return K * a * c * std::sin(beta) *
           (a * a + 2.0 * c * c + 3.0 * a * c * std::cos(beta)) / (6.0 * y2);
}
double a2_cf(double K, double a, double c, double beta) {
    const double y2 = a * a + c * c + 2.0 * a * c * std::cos(beta);
    return K * a * c * std::sin(beta) *
           (2.0 * a * a + c * c + 3.0 * a * c * std::cos(beta)) / (6.0 * y2);
}

json suite_sphere() {
    const auto K = field::make_constant(1.0);
    double worst = 0.0;
    for (double a : {0.2, 0.5, 1.0})
        for (double c : {0.2, 0.5, 1.0})
            for (double beta : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
                const fsol::TriangleSpec t{a, c, beta};
                worst = std::max({worst,
                                  std::abs(fsol::top_line_b2(K, t) -
                                           b2_cf(1, a, c, beta)),
                                  std::abs(fsol::top_angle_gamma2(K, t) -
                                           g2_cf(1, a, c, beta)),
                                  std::abs(fsol::opening_angle_alpha2(K, t) -
                                           a2_cf(1, a, c, beta))});
            }
    return {{"name", "sphere"}, {"pass", worst < 1e-7}, {"worst", worst}};
}

json suite_flat() {
    const auto K0 = field::make_constant(0.0);
    const fsol::TriangleSpec t{0.5, 1.0, kPi / 3.0};
    double worst = std::max({std::abs(fsol::top_line_b2(K0, t)),
                             std::abs(fsol::top_angle_gamma2(K0, t)),
                             std::abs(fsol::opening_angle_alpha2(K0, t))});
    const auto r = tri::triangulate(K0, t, 12);
    bool exact = r.b2 == 0.0 && r.gamma2 == 0.0 && r.alpha2 == 0.0;
    return {{"name", "flat"},
            {"pass", worst < 1e-12 && exact},
            {"worst", worst}};
}

json suite_integrals() {
    auto F = [](double x) { return std::atan(x + 0.5); };
    auto f = [](double x) { return 1.0 / (1.0 + (x + 0.5) * (x + 0.5)); };
    double worst = std::abs(quad::layered_integral_J(F, 1.0, 3) -
                            0.023319410780461045);
    const double exact = quad::product_integral_exact(
        [](double x) { return std::exp(x * x); }, 0.0, 0.8);
    const double err = std::abs(quad::product_integral_numeric(
                                    [](double x) { return 2.0 * x; }, 0.0,
                                    0.8, 100000) -
                                exact);
    const bool pass = worst < 1e-10 && err < 1e-4;
    return {{"name", "integrals"}, {"pass", pass}, {"worst", worst}};
}

json suite_roundtrip() {
    const auto K1 = field::make_constant(1.0);
    const auto K0 = field::make_constant(0.0);
    double worst = 0.0;
    for (double c : {0.3, 0.7}) {
        worst = std::max(worst,
                         std::abs(fnc::metric_from_solution(K1, c, 0.0)
                                      .g_phiphi -
                                  std::sin(c) * std::sin(c)));
        worst = std::max(worst,
                         std::abs(fnc::metric_from_solution(K0, c, 0.0)
                                      .g_phiphi -
                                  c * c) * 1e3);
    }
    return {{"name", "roundtrip"}, {"pass", worst < 1e-5}, {"worst", worst}};
}

int cmd_validate(const std::string& suite, const std::string& out) {
    std::vector<json> results;
    if (suite == "sphere" || suite == "all") results.push_back(suite_sphere());
    if (suite == "flat" || suite == "all") results.push_back(suite_flat());
    if (suite == "integrals" || suite == "all")
        results.push_back(suite_integrals());
    if (suite == "roundtrip" || suite == "all")
        results.push_back(suite_roundtrip());
    if (results.empty()) throw DomainError("unknown suite: " + suite);
    bool all = true;
    json j;
    j["suites"] = results;
    for (const auto& r : results) all = all && r["pass"].get<bool>();
    j["pass"] = all;
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(out, std::ios::binary);
        f << text;
    }
    return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic flow bundle toolkit"};
    app.require_subcommand(1);
    // Flat key=value per [subcommand] section; command-line flags override.
    app.set_config("--config", "", "read options from a config file");

    // laws
    auto* laws = app.add_subcommand("laws", "constant-curvature laws");
    double K = 1.0, gamma = kPi / 2.0, a = 1.0, b = 1.0;
    std::string branch = "principal";
    laws->add_option("--k", K, "curvature");
    laws->add_option("--gamma", gamma, "included angle");
    laws->add_option("--a", a, "side a");
    laws->add_option("--b", b, "side b");
    laws->add_option("--branch", branch, "principal|side");

    // flow
    auto* flow = app.add_subcommand("flow", "sample geodesic flow bundles");
    FieldOpts flow_field;
    add_field_opts(flow, flow_field);
    std::vector<double> base_l, base_phi, betas;
    double lambda_max = 1.0, tol = 1e-10;
    int n = 20;
    bool unsafe = false;
    std::string out, format = "csv";
    flow->add_option("--base-l", base_l, "base point arclengths");
    flow->add_option("--base-phi", base_phi, "base point angles");
    flow->add_option("--beta", betas, "departure angles");
    flow->add_option("--lambda-max", lambda_max, "flow length");
    flow->add_option("--n", n, "steps per geodesic");
    flow->add_option("--tol", tol, "quadrature tolerance");
    flow->add_flag("--allow-unsafe-beta", unsafe, "permit beta > pi/2");
    flow->add_option("--out", out, "output path");
    flow->add_option("--format", format, "csv|json");

    // triangulate
    auto* tric = app.add_subcommand("triangulate", "finite-N triangulation");
    FieldOpts tri_field;
    add_field_opts(tric, tri_field);
    double ta = 0.5, tc = 1.0, tbeta = kPi / 3.0, ttol = 1e-10;
    int tN = 13;
    std::string tout, tformat = "csv";
    tric->add_option("--a", ta, "side a");
    tric->add_option("--c", tc, "base c");
    tric->add_option("--beta", tbeta, "angle beta");
    tric->add_option("--n", tN, "slice count N");
    tric->add_option("--tol", ttol, "quadrature tolerance");
    tric->add_option("--out", tout, "segment geometry output");
    tric->add_option("--format", tformat, "csv|json");

    // metric
    auto* met = app.add_subcommand("metric", "metric reconstruction");
    FieldOpts met_field;
    add_field_opts(met, met_field);
    double ml = 0.5, mphi = 0.0;
    std::string mout, mformat = "csv";
    met->add_option("--base-l", ml, "base arclength");
    met->add_option("--base-phi", mphi, "base angle");
    met->add_option("--out", mout, "output path");
    met->add_option("--format", mformat, "csv|json");

    // immerse
    auto* imm = app.add_subcommand("immerse", "embed a profile surface");
    std::string relation = "lambert";
    double r_max = 2.0, itol = 1e-10;
    int in_steps = 24;
    std::string iout, iformat = "csv";
    imm->add_option("--relation", relation, "lambert|flat");
    imm->add_option("--r-max", r_max, "profile radius");
    imm->add_option("--n", in_steps, "grid steps");
    imm->add_option("--tol", itol, "quadrature tolerance");
    imm->add_option("--out", iout, "output path");
    imm->add_option("--format", iformat, "csv|json");

    // validate
    auto* val = app.add_subcommand("validate", "run validation suites");
    std::string suite = "all", vout;
    val->add_option("--suite", suite, "sphere|flat|integrals|roundtrip|all");
    val->add_option("--out", vout, "JSON summary path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (laws->parsed()) return cmd_laws(K, gamma, a, b, branch);
        if (flow->parsed())
            return cmd_flow(flow_field, base_l, base_phi, betas, lambda_max,
                            n, tol, unsafe, out, format, config_string(flow));
        if (tric->parsed())
            return cmd_triangulate(tri_field, ta, tc, tbeta, tN, ttol, tout,
                                   tformat, config_string(tric));
        if (met->parsed())
            return cmd_metric(met_field, ml, mphi, mout, mformat,
                              config_string(met));
        if (imm->parsed())
            return cmd_immerse(relation, r_max, in_steps, itol, iout, iformat,
                               config_string(imm));
        if (val->parsed()) return cmd_validate(suite, vout);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
