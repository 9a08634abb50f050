#include "report.hpp"

#include <cmath>

namespace mbbox::cli {

using nlohmann::json;

namespace {

// Non-finite numbers have no JSON spelling; they travel as null and come back as +inf.
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
double num_of(const json& j) { return j.is_null() ? INFINITY : j.get<double>(); }

json cplx(Complex z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }
Complex cplx_of(const json& j) { return {num_of(j.at("re")), num_of(j.at("im"))}; }

json cplx_map(const std::map<std::string, Complex>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = cplx(v);
    return j;
}
std::map<std::string, Complex> cplx_map_of(const json& j) {
    std::map<std::string, Complex> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = cplx_of(it.value());
    return m;
}
json num_map(const std::map<std::string, double>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = num(v);
    return j;
}
std::map<std::string, double> num_map_of(const json& j) {
    std::map<std::string, double> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = num_of(it.value());
    return m;
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

bool PointRecord::operator==(const PointRecord& o) const {
    const auto& a = kinematics;
    const auto& b = o.kinematics;
    return integral == o.integral && a.s == b.s && a.t == b.t && a.msq == b.msq && a.eps == b.eps &&
           method == o.method && value == o.value && laurent == o.laurent &&
           breakdown == o.breakdown && diagnostics == o.diagnostics && values == o.values &&
           deviations == o.deviations && status == o.status && message == o.message;
}

bool CheckRecord::operator==(const CheckRecord& o) const {
    return suite == o.suite && name == o.name && point == o.point && same(deviation, o.deviation) &&
           same(tolerance, o.tolerance) && pass == o.pass && error == o.error;
}

json to_json(const PointRecord& r) {
    const auto& k = r.kinematics;
    json j;
    j["integral"] = r.integral;
    j["kinematics"] = {{"s", k.s}, {"t", k.t}, {"msq", k.msq ? json(*k.msq) : json(nullptr)},
                       {"eps", k.eps}};
    j["method"] = r.method;
    j["value"] = cplx(r.value);
    j["laurent"] = json::array();
    for (const auto& term : r.laurent) {
        j["laurent"].push_back(
            {{"power", term.power}, {"re", num(term.value.real())}, {"im", num(term.value.imag())}});
    }
    j["breakdown"] = cplx_map(r.breakdown);
    j["diagnostics"] = num_map(r.diagnostics);
    if (!r.values.empty()) j["values"] = cplx_map(r.values);
    if (!r.deviations.empty()) j["deviations"] = num_map(r.deviations);
    j["status"] = r.status;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

PointRecord point_from_json(const json& j) {
    PointRecord r;
    r.integral = j.at("integral").get<std::string>();
    const auto& kj = j.at("kinematics");
    r.kinematics.s = kj.at("s").get<double>();
    r.kinematics.t = kj.at("t").get<double>();
    if (!kj.at("msq").is_null()) r.kinematics.msq = kj.at("msq").get<double>();
    r.kinematics.eps = kj.at("eps").get<double>();
    r.method = j.at("method").get<std::string>();
    r.value = cplx_of(j.at("value"));
    for (const auto& t : j.at("laurent")) {
        r.laurent.push_back({t.at("power").get<int>(), {num_of(t.at("re")), num_of(t.at("im"))}});
    }
    r.breakdown = cplx_map_of(j.at("breakdown"));
    r.diagnostics = num_map_of(j.at("diagnostics"));
    if (j.contains("values")) r.values = cplx_map_of(j.at("values"));
    if (j.contains("deviations")) r.deviations = num_map_of(j.at("deviations"));
    r.status = j.value("status", "ok");
    r.message = j.value("message", "");
    return r;
}

json to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["records"] = json::array();
    for (const auto& p : r.records) j["records"].push_back(to_json(p));
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cj = {{"suite", c.suite},         {"name", c.name},
                   {"point", c.point},         {"deviation", num(c.deviation)},
                   {"tolerance", num(c.tolerance)}, {"pass", c.pass}};
        if (!c.error.empty()) cj["error"] = c.error;
        j["checks"].push_back(std::move(cj));
    }
    j["summary"] = {{"max_deviation", num(r.summary.max_deviation)},
                    {"failures", r.summary.failures},
                    {"warnings", r.summary.warnings}};
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& p : j.at("records")) r.records.push_back(point_from_json(p));
    for (const auto& c : j.at("checks")) {
        r.checks.push_back({c.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                            c.at("point").get<std::string>(), num_of(c.at("deviation")),
                            num_of(c.at("tolerance")), c.at("pass").get<bool>(),
                            c.value("error", "")});
    }
    const auto& s = j.at("summary");
    r.summary = {num_of(s.at("max_deviation")), s.at("failures").get<int>(),
                 s.at("warnings").get<int>()};
    return r;
}

int exit_code(const Report& r) {
    bool input = false, numeric = false, failed = false;
    for (const auto& p : r.records) {
        input |= p.status == "input-error";
        numeric |= p.status == "not-converged";
        failed |= p.status == "fail";
    }
    for (const auto& c : r.checks) failed |= !c.pass;
    if (input) return kInputError;
    if (numeric) return kNotConverged;
    return failed ? kVerifyFailed : kOk;
}

}  // namespace mbbox::cli
