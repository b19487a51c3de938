#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qident/families.hpp"
#include "qident/spec_parse.hpp"
#include "qident/verify.hpp"

using namespace qident;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kIdentityFail = 1, kConfig = 2, kUncertified = 3 };

/// "1e-25" or any rational literal.
BigRational parse_positive(const std::string& text, const char* what) {
    const BigRational v = BigRational::parse(text);
    if (v.sign() <= 0) throw ConfigError(std::string(what) + " must be positive");
    return v;
}

struct CheckArgs {
    std::string suite = "all";
    int order = 8;
    std::string mode;
    std::uint64_t seed = 0;
    std::string eps = "1e-25";
    std::string tail = "1e-30";
    int points = 5;
    int kmax = 5000;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    bool stable = false;
    bool allow_skip = false;
    bool mutations = false;
    std::string config;
};

std::string json_string(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ConfigError(std::string("config key '") + key + "' must be a string");
}

/// Reads the config document; values for flags given on the command line are kept.
void apply_config(CheckArgs& a, const CLI::App& cmd, std::map<std::string, std::vector<Assignment>>& injected) {
    std::ifstream in(a.config);
    if (!in) throw ConfigError("cannot read config file '" + a.config + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
    try {
        for (const auto& [key, val] : j.items()) {
            if (key == "suite") {
                if (!given("--suite")) a.suite = val.get<std::string>();
            } else if (key == "order") {
                if (!given("--order")) a.order = val.get<int>();
            } else if (key == "mode") {
                if (!given("--mode")) a.mode = val.get<std::string>();
            } else if (key == "seed") {
                if (!given("--seed")) a.seed = val.get<std::uint64_t>();
            } else if (key == "eps") {
                if (!given("--eps")) a.eps = json_string(j, "eps");
            } else if (key == "tail") {
                if (!given("--tail")) a.tail = json_string(j, "tail");
            } else if (key == "points") {
                if (!given("--points")) a.points = val.get<int>();
            } else if (key == "kmax") {
                if (!given("--kmax")) a.kmax = val.get<int>();
            } else if (key == "format") {
                if (!given("--format")) a.format = val.get<std::string>();
            } else if (key == "out") {
                if (!given("--out")) a.out = val.get<std::string>();
            } else if (key == "jobs") {
                if (!given("--jobs")) a.jobs = val.get<int>();
            } else if (key == "stable") {
                if (!given("--stable")) a.stable = val.get<bool>();
            } else if (key == "allow_skip") {
                if (!given("--allow-skip")) a.allow_skip = val.get<bool>();
            } else if (key == "sample_points") {
                for (const auto& [id, list] : val.items()) {
                    find_check(id);
                    for (const auto& pt : list) {
                        std::vector<std::string> items;
                        for (const auto& [sym, v] : pt.items())
                            items.push_back(sym + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
                        injected[id].push_back(parse_bindings(items));
                    }
                }
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config value has the wrong type: ") + e.what());
    }
}

std::string text_line(const CheckReport& r) {
    std::ostringstream os;
    std::string status = to_string(r.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << std::left << std::setw(12) << status << std::setw(16) << r.id << std::setw(15) << to_string(r.mode);
    if (r.mode == Mode::Analytic) os << r.points.size() << " points";
    else os << "N=" << r.order;
    if (!r.mutation.empty()) os << "  [rhs " << r.mutation << "]";
    if (!r.reason.empty()) os << "  (" << r.reason << ")";
    if (!r.witness.is_null()) os << "\n    witness: " << r.witness.dump();
    return os.str();
}

int exit_code(const std::vector<CheckReport>& rs, bool allow_skip) {
    bool error = false, fail = false, uncertified = false;
    for (const auto& r : rs) {
        error = error || r.status == Status::Error;
        fail = fail || r.status == Status::Fail || (r.status == Status::Skipped && !allow_skip);
        uncertified = uncertified || r.status == Status::Uncertified;
    }
    if (error) return kConfig;
    if (fail) return kIdentityFail;
    if (uncertified) return kUncertified;
    return kPass;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << text;
}

int cmd_check(CheckArgs a, const CLI::App& cmd) {
    std::map<std::string, std::vector<Assignment>> injected;
    if (!a.config.empty()) apply_config(a, cmd, injected);
    if (a.order < 1) throw ConfigError("--order must be at least 1");
    if (a.points < 1) throw ConfigError("--points must be at least 1");
    if (a.kmax < 1) throw ConfigError("--kmax must be at least 1");
    if (a.format != "text" && a.format != "json") throw ConfigError("--format must be text or json");

    RunOptions opt;
    opt.order = a.order;
    opt.seed = a.seed;
    opt.points = a.points;
    opt.eps = parse_positive(a.eps, "--eps");
    opt.numeric.tail_target = parse_positive(a.tail, "--tail");
    opt.numeric.kmax = a.kmax;
    opt.jobs = std::max(1, a.jobs);
    opt.injected_points = std::move(injected);
    if (!a.mode.empty()) opt.mode_override = parse_mode(a.mode);

    const auto checks = select_checks(a.suite);
    std::vector<CheckReport> reports;
    if (a.mutations) {
        std::ostringstream os;
        json arr = json::array();
        int flipped = 0, caught = 0;
        for (const auto* c : checks) {
            const MutationResult m = mutation_witness(*c, opt);
            std::string label = "UNDETECTED";
            if (m.flips()) label = "FLIPS";
            else if (m.witness) label = "BOTH-FAIL";
            flipped += m.flips();
            caught += m.witness.has_value();
            os << std::left << std::setw(12) << label << std::setw(16) << c->id << "unmutated "
               << to_string(m.base.status);
            if (m.witness) os << ", rhs " << m.witness->mutation << " fails";
            os << "\n";
            json j{{"id", c->id}, {"unmutated", to_string(m.base.status)}, {"flips", m.flips()}};
            if (m.witness) j["mutated"] = to_json(*m.witness, a.stable);
            arr.push_back(std::move(j));
        }
        os << caught << "/" << checks.size() << " mutated checks fail; " << flipped
           << " flip from pass to fail\n";
        emit(a.format == "json" ? json{{"schema_version", kReportSchemaVersion}, {"mutations", arr}}.dump(2) + "\n"
                                : os.str(),
             a.out);
        return caught == static_cast<int>(checks.size()) ? kPass : kIdentityFail;
    }

    reports = run_suite(checks, opt);
    if (a.format == "json") {
        emit(reports_to_json(reports, a.stable).dump(2) + "\n", a.out);
    } else {
        std::ostringstream os;
        std::map<std::string, int> counts;
        for (const auto& r : reports) {
            os << text_line(r);
            if (!a.stable) os << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
            os << "\n";
            ++counts[to_string(r.status)];
        }
        os << reports.size() << " checks:";
        for (const auto& [k, n] : counts) os << " " << n << " " << k;
        os << "\n";
        emit(os.str(), a.out);
    }
    return exit_code(reports, a.allow_skip);
}

int cmd_expand(const std::string& family, int n, const std::string& format, bool legend) {
    const RatFunc p = expand_family(family, n);
    if (format == "json") {
        std::cout << json{{"family", family}, {"n", n}, {"polynomial", p.to_string()}}.dump(2) << "\n";
        return kPass;
    }
    std::cout << p.to_string() << "\n";
    if (legend) std::cout << "legend: A = q^alpha, B = q^beta\n";
    return kPass;
}

int cmd_eval(const std::string& text, const std::vector<std::string>& bindings, const std::string& tail, int kmax,
             int digits) {
    const Assignment values = parse_bindings(bindings);
    if (!values.bound(Sym::q)) throw ConfigError("bind q, e.g. q=1/2");
    require_unit_disc(values.at(Sym::q));
    const PhiSpec<BigRational> spec = bind_phi(parse_phi(text), values);
    NumericConfig cfg;
    cfg.tail_target = parse_positive(tail, "--tail");
    cfg.kmax = kmax;
    const NumericSum r = phi_numeric(spec, values.at(Sym::q), cfg);
    std::cout << "value   " << r.value.to_string() << "\n"
              << "decimal " << r.value.to_decimal(digits) << "\n"
              << "tail    <= " << (r.tail.is_zero() ? std::string("0") : r.tail.to_sci()) << "\n"
              << "terms   " << r.terms << "\n";
    return kPass;
}

int cmd_list(const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : registry()) {
            json vars = json::array();
            for (Sym s : c.expansion_vars) vars.push_back(std::string(sym_name(s)));
            json cons = json::array();
            for (const auto& k : c.constraints) cons.push_back(k.text);
            arr.push_back({{"id", c.id}, {"anchor", c.anchor}, {"mode", to_string(c.mode)}, {"expansion_vars", vars},
                           {"constraints", cons}});
        }
        std::cout << arr.dump(2) << "\n";
        return kPass;
    }
    for (const auto& c : registry())
        std::cout << std::left << std::setw(16) << c.id << std::setw(10) << to_string(c.mode) << c.anchor << "\n";
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-series identities"};
    app.require_subcommand(1);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "run identity checks");
    check->add_option("--suite", ca.suite, "all, formal, analytic, reductions, or comma-separated ids");
    check->add_option("--order", ca.order, "truncation order N for formal checks");
    check->add_option("--mode", ca.mode, "override: formal or formal-sampled");
    check->add_option("--seed", ca.seed, "seed for sampled points");
    check->add_option("--eps", ca.eps, "comparison tolerance for analytic checks");
    check->add_option("--tail", ca.tail, "target bound for each certified tail");
    check->add_option("--points", ca.points, "sample points per analytic check");
    check->add_option("--kmax", ca.kmax, "maximum number of summed terms");
    check->add_option("--format", ca.format, "text or json");
    check->add_option("--out", ca.out, "write the report to a file");
    check->add_option("--jobs", ca.jobs, "parallel checks");
    check->add_flag("--stable", ca.stable, "omit timings");
    check->add_flag("--allow-skip", ca.allow_skip, "skipped checks do not fail the run");
    check->add_flag("--mutations", ca.mutations, "report the first right-hand mutation that fails");
    check->add_option("--config", ca.config, "JSON file with the same keys; flags take precedence");

    std::string family, efmt = "text";
    int n = 0;
    bool legend = false;
    auto* expand = app.add_subcommand("expand", "print a polynomial family member");
    expand->add_option("family", family, "family tag")->required();
    expand->add_option("n", n, "index")->required();
    expand->add_option("--format", efmt, "text or json");
    expand->add_flag("--legend", legend, "explain A and B");

    std::string phi, tail = "1e-30";
    std::vector<std::string> binds;
    int kmax = 5000, digits = 40;
    auto* eval = app.add_subcommand("eval", "evaluate a basic hypergeometric series");
    eval->add_option("series", phi, "e.g. \"1phi0[0; -; z]\"")->required();
    eval->add_option("bindings", binds, "name=value pairs, e.g. q=1/2 z=1/4");
    eval->add_option("--bind", binds, "name=value pairs");
    eval->add_option("--tail", tail, "target tail bound");
    eval->add_option("--kmax", kmax, "maximum number of terms");
    eval->add_option("--digits", digits, "decimal digits printed");

    std::string lfmt = "text";
    auto* list = app.add_subcommand("list", "list registered identities");
    list->add_option("--format", lfmt, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kConfig;
    }

    try {
        if (check->parsed()) return cmd_check(ca, *check);
        if (expand->parsed()) return cmd_expand(family, n, efmt, legend);
        if (eval->parsed()) return cmd_eval(phi, binds, tail, kmax, digits);
        if (list->parsed()) return cmd_list(lfmt);
    } catch (const TailNotBounded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUncertified;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return kConfig;
    }
    return kPass;
}
