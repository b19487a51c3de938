#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qident/verify.hpp"

namespace qident {

std::string to_string(Mode m) {
    switch (m) {
    case Mode::Formal: return "formal";
    case Mode::FormalSampled: return "formal-sampled";
    case Mode::Analytic: return "analytic";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Uncertified: return "uncertified";
    case Status::Error: return "error";
    }
    return "?";
}

Mode parse_mode(const std::string& text) {
    if (text == "formal") return Mode::Formal;
    if (text == "formal-sampled") return Mode::FormalSampled;
    if (text == "analytic") return Mode::Analytic;
    throw ConfigError("unknown mode '" + text + "' (formal, formal-sampled, analytic)");
}

std::string Mutation::label() const {
    const std::string n(sym_name(target));
    switch (kind) {
    case Kind::Scale: return n + " -> 2" + n;
    case Kind::TimesQ: return n + " -> " + n + "q";
    case Kind::Swap: return n + " <-> " + std::string(sym_name(other));
    }
    return "?";
}

Rng::Rng(std::uint64_t seed, const std::string& salt) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (unsigned char ch : salt) words.push_back(ch);
    std::seed_seq seq(words.begin(), words.end());
    gen_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

namespace {

using Clock = std::chrono::steady_clock;

nlohmann::json point_json(const Assignment& p, const std::vector<Sym>& syms) {
    nlohmann::json j = nlohmann::json::object();
    for (Sym s : syms)
        if (p.bound(s)) j[std::string(sym_name(s))] = p.at(s).to_string();
    return j;
}

std::string degree_label(const std::vector<Sym>& vars, const Deg& d) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += std::string(sym_name(vars[i]));
        if (d[i] != 1) out += "^" + std::to_string(d[i]);
    }
    return out.empty() ? "1" : out;
}

/// First coefficient (in increasing total degree) where the series differ.
template <class K>
std::optional<nlohmann::json> first_mismatch(const TruncSeries<K>& l, const TruncSeries<K>& r) {
    if (l.vars() != r.vars()) throw Error("sides use different expansion variables");
    const int order = std::min(l.order(), r.order());
    for (const Deg& d : l.degrees()) {
        if (total(d) > order) continue;
        if (equal_values(l.coeff(d), r.coeff(d))) continue;
        return nlohmann::json{{"coefficient", degree_label(l.vars(), d)},
                              {"degree", total(d)},
                              {"lhs", value_string(l.coeff(d))},
                              {"rhs", value_string(r.coeff(d))}};
    }
    return std::nullopt;
}

BigRational random_rational(Rng& rng) {
    for (;;) {
        const long num = rng.uniform(-99, 99);
        const long den = rng.uniform(1, 99);
        if (num != 0) return BigRational(num, den);
    }
}

Assignment formal_point(const IdentityCheck& check, Rng& rng) {
    Assignment p;
    for (Sym s : check.params) {
        if (std::find(check.keep_symbolic.begin(), check.keep_symbolic.end(), s) != check.keep_symbolic.end()) continue;
        BigRational v = random_rational(rng);
        while (s == Sym::q && (v == BigRational(1) || v == BigRational(-1))) v = random_rational(rng);
        p.set(s, v);
    }
    return p;
}

template <class K>
std::optional<nlohmann::json> compare_formal(const IdentityCheck& check, const Scalars<K>& S, int order,
                                             const SideFn<K>& lhs, const SideFn<K>& rhs, const Mutation* mutation) {
    const Scalars<K> SR = mutation ? mutation->apply(S) : S;
    for (int i = 0; i < check.instances; ++i) {
        const auto l = lhs(S, order, i);
        const auto r = rhs(SR, order, i);
        if (auto w = first_mismatch(l, r)) {
            if (check.instances > 1) (*w)[check.instance_name.empty() ? "instance" : check.instance_name] = i;
            return w;
        }
    }
    return std::nullopt;
}

bool within(const BigRational& v, const BigRational& cap) { return v.abs() <= cap; }

/// Accepts a sampled point: constraints with margin, left-hand convergence conditions.
bool admissible(const IdentityCheck& check, const Assignment& p) {
    try {
        for (const auto& c : check.constraints)
            if (!within(c.expr(p), BigRational(3, 4))) return false;
        for (const auto& c : check.sampling_constraints)
            if (!(c.expr(p).abs() < BigRational(1))) return false;
    } catch (const DivisionByZero&) {
        return false;
    }
    return true;
}

void validate_injected(const IdentityCheck& check, const Assignment& p) {
    for (Sym s : check.params)
        if (!p.bound(s)) throw ConfigError("point for " + check.id + " does not bind '" + std::string(sym_name(s)) + "'");
    require_unit_disc(p.at(Sym::q));
    for (const auto& c : check.constraints) {
        BigRational v;
        try {
            v = c.expr(p);
        } catch (const DivisionByZero&) {
            throw DomainViolation(check.id + ": constraint " + c.text + " is undefined at the point");
        }
        if (!(v.abs() < BigRational(1)))
            throw DomainViolation(check.id + ": constraint " + c.text + " violated (value " + v.to_sci() + ")");
    }
}

struct PointOutcome {
    bool ok = true;
    nlohmann::json witness;
};

PointOutcome evaluate_point(const IdentityCheck& check, const Assignment& p, const RunOptions& opt,
                            const Mutation* mutation) {
    const Scalars<BigRational> S(p);
    const Scalars<BigRational> SR = mutation ? mutation->apply(S) : S;
    for (int i = 0; i < check.instances; ++i) {
        const Ball l = check.lhs_value(S, opt.numeric, i);
        const Ball r = check.rhs_value(SR, opt.numeric, i);
        const BigRational diff = (l.mid - r.mid).abs();
        const BigRational allowed = opt.eps + l.rad + r.rad;
        if (diff > allowed) {
            nlohmann::json w{{"point", point_json(p, check.params)},
                             {"lhs", l.to_string()},
                             {"rhs", r.to_string()},
                             {"difference", diff.to_sci()},
                             {"allowed", allowed.to_sci()}};
            if (check.instances > 1) w[check.instance_name.empty() ? "instance" : check.instance_name] = i;
            return {false, std::move(w)};
        }
    }
    return {};
}

std::optional<Mode> effective_mode(const IdentityCheck& check, const RunOptions& opt, std::string& reason) {
    if (!opt.mode_override || *opt.mode_override == check.mode) return check.mode;
    const bool formal_entry = check.mode != Mode::Analytic;
    const bool formal_target = *opt.mode_override != Mode::Analytic;
    if (formal_entry && formal_target) return *opt.mode_override;
    reason = "registered " + to_string(check.mode) + "; cannot run as " + to_string(*opt.mode_override);
    return std::nullopt;
}

} // namespace

CheckReport run_formal(const IdentityCheck& check, int order, bool sampled, std::uint64_t seed,
                       const Mutation* mutation) {
    CheckReport rep;
    rep.id = check.id;
    rep.anchor = check.anchor;
    rep.mode = sampled ? Mode::FormalSampled : Mode::Formal;
    rep.order = order;
    rep.notes = check.notes;
    if (mutation) rep.mutation = mutation->label();
    if (!check.lhs_sym) throw ConfigError(check.id + " has no formal sides");

    std::optional<nlohmann::json> w;
    if (!sampled) {
        w = compare_formal(check, Scalars<RatFunc>(), order, check.lhs_sym, check.rhs_sym, mutation);
    } else {
        rep.seed = seed;
        Rng rng(seed, check.id);
        const bool numeric = check.lhs_num && check.keep_symbolic.empty();
        for (int attempt = 0;; ++attempt) {
            const Assignment p = formal_point(check, rng);
            try {
                if (numeric)
                    w = compare_formal(check, Scalars<BigRational>(p), order, check.lhs_num, check.rhs_num, mutation);
                else
                    w = compare_formal(check, Scalars<RatFunc>(p), order, check.lhs_sym, check.rhs_sym, mutation);
                rep.points = {p};
                break;
            } catch (const DivisionByZero&) {
                if (attempt >= 32) throw;
            } catch (const NonUnitConstantTerm&) {
                if (attempt >= 32) throw;
            }
        }
        rep.point_symbols = check.params;
        if (w && !rep.points.empty()) (*w)["point"] = point_json(rep.points[0], check.params);
    }
    if (w) {
        rep.status = Status::Fail;
        rep.witness = std::move(*w);
    }
    return rep;
}

std::vector<Assignment> sample_points(const IdentityCheck& check, std::uint64_t seed, int count) {
    if (!check.sampler) throw ConfigError(check.id + " has no sampler");
    Rng rng(seed, check.id);
    std::vector<Assignment> out;
    for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
        if (attempt > 100000) throw ConfigError(check.id + ": no admissible sample points found");
        Assignment p = check.sampler(rng);
        if (admissible(check, p)) out.push_back(std::move(p));
    }
    return out;
}

CheckReport run_analytic(const IdentityCheck& check, const RunOptions& opt, const Mutation* mutation) {
    CheckReport rep;
    rep.id = check.id;
    rep.anchor = check.anchor;
    rep.mode = Mode::Analytic;
    rep.seed = opt.seed;
    rep.notes = check.notes;
    rep.point_symbols = check.params;
    if (mutation) rep.mutation = mutation->label();
    if (!check.lhs_value) throw ConfigError(check.id + " has no analytic sides");

    bool uncertified = false;
    auto run_point = [&](const Assignment& p) {
        try {
            const PointOutcome o = evaluate_point(check, p, opt, mutation);
            if (!o.ok) {
                rep.status = Status::Fail;
                rep.witness = o.witness;
            }
        } catch (const TailNotBounded& e) {
            uncertified = true;
            if (rep.reason.empty()) rep.reason = e.what();
        }
    };

    const auto inj = opt.injected_points.find(check.id);
    if (inj != opt.injected_points.end()) {
        for (const auto& p : inj->second) validate_injected(check, p);
        for (const auto& p : inj->second) {
            rep.points.push_back(p);
            run_point(p);
            if (rep.status == Status::Fail) break;
        }
    } else {
        // Points where a side has a pole are replaced by the next admissible draw.
        Rng rng(opt.seed, check.id);
        int attempts = 0;
        while (static_cast<int>(rep.points.size()) < opt.points && rep.status != Status::Fail) {
            if (++attempts > 100000) throw ConfigError(check.id + ": no admissible sample points found");
            Assignment p = check.sampler(rng);
            if (!admissible(check, p)) continue;
            try {
                run_point(p);
            } catch (const DivisionByZero&) {
                continue;
            }
            rep.points.push_back(std::move(p));
        }
    }
    if (rep.status != Status::Fail && uncertified) rep.status = Status::Uncertified;
    return rep;
}

CheckReport run_check(const IdentityCheck& check, const RunOptions& opt, const Mutation* mutation) {
    const auto start = Clock::now();
    CheckReport rep;
    std::string reason;
    const std::optional<Mode> mode = effective_mode(check, opt, reason);
    try {
        if (!mode) {
            rep.id = check.id;
            rep.anchor = check.anchor;
            rep.mode = check.mode;
            rep.status = Status::Skipped;
            rep.reason = reason;
        } else if (*mode == Mode::Analytic) {
            rep = run_analytic(check, opt, mutation);
        } else {
            rep = run_formal(check, opt.order, *mode == Mode::FormalSampled, opt.seed, mutation);
        }
    } catch (const TailNotBounded& e) {
        rep.id = check.id;
        rep.anchor = check.anchor;
        rep.mode = mode.value_or(check.mode);
        rep.status = Status::Uncertified;
        rep.reason = e.what();
    } catch (const Error& e) {
        rep.id = check.id;
        rep.anchor = check.anchor;
        rep.mode = mode.value_or(check.mode);
        rep.status = Status::Error;
        rep.reason = std::string(e.kind()) + ": " + e.what();
    }
    if (mutation && rep.mutation.empty()) rep.mutation = mutation->label();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
}

std::vector<CheckReport> run_suite(const std::vector<const IdentityCheck*>& checks, const RunOptions& opt) {
    std::vector<CheckReport> out(checks.size());
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(checks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) out[i] = run_check(*checks[i], opt);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return out;
}

std::vector<CheckReport> run_reductions(const RunOptions& opt) { return run_suite(select_checks("reductions"), opt); }

MutationResult mutation_witness(const IdentityCheck& check, const RunOptions& opt) {
    MutationResult out{run_check(check, opt), std::nullopt};
    RunOptions mopt = opt;
    if (out.base.mode == Mode::Analytic && !out.base.points.empty()) mopt.injected_points[check.id] = out.base.points;
    for (const auto& m : check.mutations) {
        CheckReport r = run_check(check, mopt, &m);
        if (r.status == Status::Fail) {
            out.witness = std::move(r);
            break;
        }
    }
    return out;
}

nlohmann::json to_json(const CheckReport& r, bool stable) {
    nlohmann::json j{{"id", r.id}, {"anchor", r.anchor}, {"mode", to_string(r.mode)}, {"status", to_string(r.status)}};
    if (r.mode == Mode::Analytic) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : r.points) pts.push_back(point_json(p, r.point_symbols));
        j["points"] = std::move(pts);
        j["seed"] = r.seed;
    } else {
        j["order"] = r.order;
        if (r.mode == Mode::FormalSampled) {
            j["seed"] = r.seed;
            if (!r.points.empty()) j["point"] = point_json(r.points[0], r.point_symbols);
        }
    }
    j["witness"] = r.witness.is_null() ? nlohmann::json(nullptr) : r.witness;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.mutation.empty()) j["mutation"] = r.mutation;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!stable) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& rs, bool stable) {
    nlohmann::json arr = nlohmann::json::array();
    std::map<std::string, int> counts;
    for (const auto& r : rs) {
        arr.push_back(to_json(r, stable));
        ++counts[to_string(r.status)];
    }
    return nlohmann::json{{"schema_version", kReportSchemaVersion}, {"reports", std::move(arr)}, {"summary", counts}};
}

} // namespace qident
