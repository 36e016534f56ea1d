#include "adeg/certificate.hpp"

#include <cstdlib>
#include <fstream>

namespace adeg {

RunConfig RunConfig::from_env() {
    RunConfig c;
    if (const char* v = std::getenv("ADEG_BUDGET_INPUTS")) c.input_budget = Int(v);
    if (const char* v = std::getenv("ADEG_BUDGET_SUBSETS")) c.subset_budget = Int(v);
    if (const char* v = std::getenv("ADEG_PREC_BITS")) c.precision_bits = std::atoi(v);
    if (const char* v = std::getenv("ADEG_JOBS")) c.jobs = std::atoi(v);
    return c;
}

std::string Certificate::verdict() const {
    bool any_hard = false;
    for (const auto& c : checks) {
        if (c.informative) continue;
        any_hard = true;
        if (!c.pass) return "failed";
    }
    return any_hard ? "certified" : "informative-only";
}

json Certificate::to_json() const {
    json j;
    j["claim"] = claim;
    json params = json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    json cl = json::array();
    for (const auto& c : checks) {
        json cj;
        cj["name"] = c.name;
        cj["lhs"] = c.lhs;
        cj["relation"] = c.relation;
        cj["rhs"] = c.rhs;
        cj["pass"] = c.pass;
        cj["informative"] = c.informative;
        if (!c.note.empty()) cj["note"] = c.note;
        cl.push_back(cj);
    }
    j["checks"] = cl;
    if (!witness_digest.empty()) j["witness_digest"] = witness_digest;
    j["verdict"] = verdict();
    return j;
}

json witness_to_json(const DualWitness& w) {
    json j;
    j["n"] = w.n;
    json entries = json::array();
    for (const auto& [x, v] : w.entries) {
        CubePoint p{w.n, x};
        entries.push_back({{"x", p.to_string()}, {"num", num(v).str()}, {"den", den(v).str()}});
    }
    j["entries"] = entries;
    return j;
}

DualWitness witness_from_json(const json& j) {
    DualWitness w(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
        CubePoint p = CubePoint::parse(e.at("x").get<std::string>());
        if (p.n != w.n) throw std::invalid_argument("witness_from_json: entry length mismatch");
        Rat v(Int(e.at("num").get<std::string>()), Int(e.at("den").get<std::string>()));
        w.add(p.mask, v);
    }
    return w;
}

json univariate_witness_to_json(const UnivariateWitness& w) {
    json j;
    j["kind"] = "univariate";
    j["T"] = w.T;
    json values = json::array();
    for (int t : w.nodes)
        values.push_back({{"t", t}, {"num", num(w.at(t)).str()}, {"den", den(w.at(t)).str()}});
    j["values"] = values;
    return j;
}

UnivariateWitness univariate_witness_from_json(const json& j) {
    int T = j.at("T").get<int>();
    std::vector<std::pair<int, Rat>> vals;
    for (const auto& e : j.at("values"))
        vals.emplace_back(e.at("t").get<int>(),
                          Rat(Int(e.at("num").get<std::string>()),
                              Int(e.at("den").get<std::string>())));
    return custom_witness(T, vals);
}

json poly_to_json(const MultilinearPoly& p) {
    json j;
    j["n"] = p.n;
    j["basis"] = p.basis == Basis::Character ? "character" : "zeroone";
    json terms = json::array();
    for (const auto& [m, c] : p.terms) {
        json vars = json::array();
        for (std::uint64_t rest = m; rest; rest &= rest - 1) vars.push_back(std::countr_zero(rest));
        terms.push_back({{"vars", vars}, {"num", num(c).str()}, {"den", den(c).str()}});
    }
    j["terms"] = terms;
    return j;
}

MultilinearPoly poly_from_json(const json& j) {
    std::string basis = j.at("basis").get<std::string>();
    MultilinearPoly p(j.at("n").get<int>(),
                      basis == "character" ? Basis::Character : Basis::ZeroOne);
    if (basis != "character" && basis != "zeroone")
        throw std::invalid_argument("poly_from_json: unknown basis " + basis);
    for (const auto& t : j.at("terms")) {
        std::uint64_t m = 0;
        for (int v : t.at("vars")) {
            if (v < 0 || v >= p.n) throw std::invalid_argument("poly_from_json: variable index");
            m |= 1ULL << v;
        }
        p.add_term(m, Rat(Int(t.at("num").get<std::string>()),
                          Int(t.at("den").get<std::string>())));
    }
    return p;
}

json list_to_json(const ListInput& s) {
    return json{{"N", s.N}, {"R", s.R}, {"items", s.items}};
}

ListInput list_from_json(const json& j) {
    return ListInput(j.at("N").get<int>(), j.at("R").get<int>(),
                     j.at("items").get<std::vector<int>>());
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_text_atomic: cannot open " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("write_text_atomic: rename failed for " + path);
}

}  // namespace adeg
