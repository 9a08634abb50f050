#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mbbox/pipeline.hpp"
#include "mbbox/verify.hpp"

namespace mbbox::cli {

using nlohmann::json;

namespace {

struct PointArgs {
    std::string integral = "massless";
    double s = -1.0, t = -2.0, msq = 0.0, eps = 0.3;
    CLI::Option* msq_opt = nullptr;
    std::string method = "closed";
    std::string cut = "pv";
    int nodes = 0;
    double height = 0.0;
    CLI::Option* nodes_opt = nullptr;
    CLI::Option* height_opt = nullptr;
    bool json = false;
    std::string out;
};

std::string error_name(const std::exception& e) {
    if (dynamic_cast<const EuclideanRegionViolation*>(&e)) return "EuclideanRegionViolation";
    if (dynamic_cast<const DegenerateKinematics*>(&e)) return "DegenerateKinematics";
    if (dynamic_cast<const InfeasibleContour*>(&e)) return "InfeasibleContour";
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const NotConverged*>(&e)) return "NotConverged";
    if (dynamic_cast<const NonConvergence*>(&e)) return "NonConvergence";
    if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
    if (dynamic_cast<const InputError*>(&e)) return "InputError";
    return "Error";
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    return fmt17(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt17(std::abs(z.imag())) + "i";
}

std::optional<double> env_number(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    if (*end != '\0' || !std::isfinite(x)) {
        throw InputError(std::string(name) + " is not a number: '" + v + "'");
    }
    return x;
}

Cut parse_cut(const std::string& c) {
    if (c == "pv") return Cut::PrincipalValue;
    if (c == "above") return Cut::AboveCut;
    if (c == "below") return Cut::BelowCut;
    throw InputError("unknown cut '" + c + "'");
}

Kinematics make_kinematics(const std::string& integral, double s, double t,
                           std::optional<double> msq, double eps) {
    if (integral != "massless" && integral != "onemass") {
        throw InputError("unknown integral '" + integral + "'");
    }
    if (integral == "onemass" && !msq) throw InputError("onemass needs --msq");
    if (integral == "massless" && msq) throw InputError("massless takes no --msq");
    Kinematics k{s, t, msq, eps};
    validate(k);
    return k;
}

Kinematics kinematics_of(const PointArgs& a) {
    return make_kinematics(a.integral, a.s, a.t,
                           a.msq_opt->count() ? std::optional<double>(a.msq) : std::nullopt, a.eps);
}

QuadOverrides quad_of(const PointArgs& a) {
    QuadOverrides q;
    if (const auto n = env_number("MBBOX_QUAD_NODES")) q.nodes = static_cast<int>(*n);
    if (const auto h = env_number("MBBOX_QUAD_HEIGHT")) q.height = *h;
    if (a.nodes_opt->count()) q.nodes = a.nodes;
    if (a.height_opt->count()) q.height = a.height;
    return q;
}

void add_point_options(CLI::App* cmd, PointArgs& a, bool with_method) {
    cmd->add_option("--integral", a.integral, "massless or onemass")
        ->check(CLI::IsMember({"massless", "onemass"}));
    cmd->add_option("--s", a.s, "Mandelstam s (< 0)");
    cmd->add_option("--t", a.t, "Mandelstam t (< 0)");
    a.msq_opt = cmd->add_option("--msq", a.msq, "external mass squared (< 0)");
    cmd->add_option("--eps", a.eps, "regulator in (0, 1)");
    if (with_method) {
        cmd->add_option("--method", a.method, "closed, closed_alt, mb, residue or feynman")
            ->check(CLI::IsMember({"closed", "closed_alt", "mb", "residue", "feynman"}));
        cmd->add_option("--cut", a.cut, "pv, above or below")
            ->check(CLI::IsMember({"pv", "above", "below"}));
    }
    a.nodes_opt = cmd->add_option("--nodes", a.nodes, "quadrature nodes per panel (>= 32)");
    a.height_opt = cmd->add_option("--height", a.height, "contour truncation height");
    cmd->add_flag("--json", a.json, "emit JSON");
    cmd->add_option("--out", a.out, "write the report to this file");
}

PointRecord record_of(const Kinematics& k, const BoxValue& v, const std::string& method) {
    PointRecord r;
    r.integral = k.has_mass() ? "onemass" : "massless";
    r.kinematics = k;
    r.method = method;
    r.value = v.value;
    r.breakdown = v.pieces;
    r.diagnostics = v.diagnostics;
    return r;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

void print_point(const PointRecord& r, std::ostream& out) {
    const auto& k = r.kinematics;
    out << r.integral << " box  s=" << fmt17(k.s) << " t=" << fmt17(k.t);
    if (k.msq) out << " msq=" << fmt17(*k.msq);
    out << " eps=" << fmt17(k.eps) << "  method=" << r.method << "\n";
    if (!r.laurent.empty()) {
        for (const auto& term : r.laurent) {
            out << "  eps^" << term.power << "  " << fmt_complex(term.value) << "\n";
        }
    } else {
        out << "  value  " << fmt_complex(r.value) << "\n";
    }
    for (const auto& [name, v] : r.breakdown) out << "  " << name << "  " << fmt_complex(v) << "\n";
    for (const auto& [name, v] : r.diagnostics) out << "  " << name << "  " << fmt17(v) << "\n";
}

double tolerance_from(double flag, const CLI::Option* opt, double fallback) {
    if (opt->count()) return flag;
    if (const auto e = env_number("MBBOX_TOL")) return *e;
    return fallback;
}

int cmd_eval(const PointArgs& a, std::ostream& out) {
    const Kinematics k = kinematics_of(a);
    const Method m = method_from_string(a.method);
    const auto v = evaluate(k, m, parse_cut(a.cut), quad_of(a));
    const auto r = record_of(k, v, a.method);
    if (a.json) {
        emit(to_json(r).dump(2) + "\n", a.out, out);
    } else {
        std::ostringstream os;
        print_point(r, os);
        emit(os.str(), a.out, out);
    }
    return kOk;
}

int cmd_expand(const PointArgs& a, int order, std::ostream& out) {
    if (order < -2 || order > 0) throw InputError("--order must lie in -2..0");
    const Kinematics k = kinematics_of(a);
    const auto series = laurent(k);
    PointRecord r;
    r.integral = k.has_mass() ? "onemass" : "massless";
    r.kinematics = k;
    r.method = "laurent";
    for (int p = -2; p <= order; ++p) {
        r.laurent.push_back({p, series.coefficient(p)});
        r.value += series.coefficient(p) * std::pow(k.eps, p);
    }
    r.diagnostics["order"] = order;
    if (a.json) {
        emit(to_json(r).dump(2) + "\n", a.out, out);
    } else {
        std::ostringstream os;
        print_point(r, os);
        emit(os.str(), a.out, out);
    }
    return kOk;
}

// Without --tol every family keeps its own default tolerance.
int cmd_verify(const std::string& suite, std::optional<double> tol, bool as_json,
               const std::string& path, std::ostream& out) {
    const auto t = tol ? verify::with_tolerance({}, *tol) : verify::Tolerances{};
    std::vector<verify::SuiteReport> suites;
    if (suite == "identities" || suite == "all") suites.push_back(verify::identities(t));
    if (suite == "massless" || suite == "all") suites.push_back(verify::massless(t));
    if (suite == "onemass" || suite == "all") suites.push_back(verify::onemass(t));
    Report rep;
    rep.command = "verify";
    for (const auto& s : suites) {
        for (const auto& c : s.checks) {
            rep.checks.push_back({s.name, c.name, c.point, c.deviation, c.tolerance, c.pass, c.error});
            if (std::isfinite(c.deviation) && c.name != "node_doubling") {
                rep.summary.max_deviation = std::max(rep.summary.max_deviation, c.deviation);
            }
            rep.summary.failures += !c.pass;
        }
    }
    if (as_json) {
        emit(to_json(rep).dump(2) + "\n", path, out);
    } else {
        std::ostringstream os;
        for (const auto& s : suites) {
            os << s.name << ": " << s.checks.size() << " checks, " << s.failures()
               << " failures, worst deviation/tolerance " << fmt3(s.worst_ratio()) << ", "
               << fmt3(s.seconds) << " s\n";
            for (const auto& c : s.checks) {
                if (c.pass) continue;
                os << "  FAIL " << c.name << " [" << c.point << "] deviation " << fmt17(c.deviation)
                   << " > " << fmt17(c.tolerance);
                if (!c.error.empty()) os << " (" << c.error << ")";
                os << "\n";
            }
        }
        os << (rep.summary.failures ? "FAIL" : "PASS") << "\n";
        emit(os.str(), path, out);
    }
    return exit_code(rep);
}

// One grid entry, evaluated with every requested method against the first.
PointRecord sweep_point(const json& p, const std::vector<std::string>& methods, double tol) {
    PointRecord r;
    r.method = methods.front();
    try {
        const std::optional<double> msq =
            p.contains("msq") && !p.at("msq").is_null() ? std::optional(p.at("msq").get<double>())
                                                         : std::nullopt;
        const std::string integral = p.value("integral", msq ? "onemass" : "massless");
        r.integral = integral;
        r.kinematics = {p.at("s").get<double>(), p.at("t").get<double>(), msq,
                        p.value("eps", 0.3)};
        const Kinematics k = make_kinematics(integral, r.kinematics.s, r.kinematics.t, msq,
                                             r.kinematics.eps);
        const auto ref = evaluate(k, method_from_string(methods.front()));
        r.value = ref.value;
        r.breakdown = ref.pieces;
        r.diagnostics = ref.diagnostics;
        bool pass = true;
        for (const auto& m : methods) {
            const auto v = evaluate(k, method_from_string(m));
            r.values[m] = v.value;
            const double dev = std::abs(v.value - ref.value) / std::abs(ref.value);
            r.deviations[m] = dev;
            const double allowed =
                (m == "mb" && k.has_mass()) ? std::max(tol, verify::Tolerances{}.mb_double) : tol;
            pass &= dev <= allowed;
        }
        r.status = pass ? "ok" : "fail";
    } catch (const DegenerateKinematics& e) {
        r.status = "skipped-degenerate";
        r.message = e.what();
    } catch (const InputError& e) {
        r.status = "input-error";
        r.message = error_name(e) + ": " + e.what();
    } catch (const NumericalError& e) {
        r.status = "not-converged";
        r.message = error_name(e) + ": " + e.what();
    } catch (const json::exception& e) {
        r.status = "input-error";
        r.message = std::string("grid point: ") + e.what();
    }
    return r;
}

}  // namespace

Report sweep_grid(const json& grid, double tol) {
    std::vector<std::string> methods{"closed", "residue", "mb"};
    json points;
    if (grid.is_array()) {
        points = grid;
    } else if (grid.is_object() && grid.contains("points") && grid.at("points").is_array()) {
        points = grid.at("points");
        if (grid.contains("methods")) {
            try {
                methods = grid.at("methods").get<std::vector<std::string>>();
            } catch (const json::exception&) {
                throw InputError("grid: 'methods' must be a list of names");
            }
        }
    } else {
        throw InputError("grid: expected a list of points or an object with 'points'");
    }
    if (methods.empty()) throw InputError("grid: empty method list");
    for (const auto& m : methods) method_from_string(m);
    for (const auto& p : points) {
        if (!p.is_object() || !p.contains("s") || !p.contains("t") || !p.at("s").is_number() ||
            !p.at("t").is_number()) {
            throw InputError("grid: every point needs numeric 's' and 't'");
        }
    }

    // Points run concurrently; records keep the input order.
    std::vector<PointRecord> records(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < points.size();) {
            records[i] = sweep_point(points[i], methods, tol);
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(points.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Report rep;
    rep.command = "sweep";
    rep.records = std::move(records);
    for (const auto& r : rep.records) {
        rep.summary.warnings += r.status == "skipped-degenerate";
        rep.summary.failures += r.status == "fail";
        for (const auto& [m, d] : r.deviations) {
            rep.summary.max_deviation = std::max(rep.summary.max_deviation, d);
        }
    }
    return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalar box integrals in dimensional regularization", "mbbox"};
    app.require_subcommand(1);

    PointArgs eval_args, expand_args;
    auto* eval = app.add_subcommand("eval", "evaluate one kinematic point");
    add_point_options(eval, eval_args, true);

    auto* expand = app.add_subcommand("expand", "Laurent coefficients in eps");
    add_point_options(expand, expand_args, false);
    int order = 0;
    expand->add_option("--order", order, "highest power of eps, -2..0");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    double vtol = 1e-11;
    bool vjson = false;
    std::string vout;
    ver->add_option("--suite", suite, "identities, massless, onemass or all")
        ->check(CLI::IsMember({"identities", "massless", "onemass", "all"}));
    auto* vtol_opt = ver->add_option("--tol", vtol, "tolerance");
    ver->add_flag("--json", vjson, "emit JSON");
    ver->add_option("--out", vout, "write the report to this file");

    auto* sweep = app.add_subcommand("sweep", "evaluate a grid of points");
    std::string grid_path, sweep_out;
    double stol = 1e-8;
    sweep->add_option("--grid", grid_path, "grid JSON file")->required();
    sweep->add_option("--out", sweep_out, "report file (stdout if absent)");
    auto* stol_opt = sweep->add_option("--tol", stol, "cross-method tolerance");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*eval) return cmd_eval(eval_args, out);
        if (*expand) return cmd_expand(expand_args, order, out);
        if (*ver) {
            std::optional<double> tol;
            if (vtol_opt->count()) {
                tol = vtol;
            } else if (const auto e = env_number("MBBOX_TOL")) {
                tol = e;
            }
            return cmd_verify(suite, tol, vjson, vout, out);
        }
        if (*sweep) {
            const double tol = tolerance_from(stol, stol_opt, 1e-8);
            std::ifstream f(grid_path);
            if (!f) throw InputError("cannot read " + grid_path);
            json grid;
            try {
                grid = json::parse(f);
            } catch (const json::parse_error& e) {
                throw InputError(std::string("grid is not valid JSON: ") + e.what());
            }
            const Report rep = sweep_grid(grid, tol);
            emit(to_json(rep).dump(2) + "\n", sweep_out, out);
            err << "sweep: " << rep.records.size() << " records, " << rep.summary.failures
                << " failures, " << rep.summary.warnings << " warnings\n";
            return exit_code(rep);
        }
    } catch (const InputError& e) {
        err << "error: " << error_name(e) << ": " << e.what() << "\n";
        return kInputError;
    } catch (const NumericalError& e) {
        err << "error: " << error_name(e) << ": " << e.what() << "\n";
        return kNotConverged;
    }
    return kInputError;
}

}  // namespace mbbox::cli
