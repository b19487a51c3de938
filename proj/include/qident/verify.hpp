#ifndef QIDENT_VERIFY_HPP
#define QIDENT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qident/numeric.hpp"

namespace qident {

enum class Mode { Formal, FormalSampled, Analytic };
/// uncertified: a tail could not be bounded; error: a configuration or domain problem.
enum class Status { Pass, Fail, Skipped, Uncertified, Error };

std::string to_string(Mode m);
std::string to_string(Status s);
/// "formal", "formal-sampled", "analytic"; throws ConfigError otherwise.
Mode parse_mode(const std::string& text);

/// Single-symbol perturbation applied to the right-hand side only.
struct Mutation {
    enum class Kind { Scale, TimesQ, Swap };
    Kind kind;
    Sym target;
    Sym other = Sym::q;

    std::string label() const;

    template <class K>
    Scalars<K> apply(const Scalars<K>& s) const {
        switch (kind) {
        case Kind::Scale: return s.with_override(target, s.sym(target) * K(2));
        case Kind::TimesQ: return s.with_override(target, s.sym(target) * s.sym(Sym::q));
        case Kind::Swap: return s.with_override(target, s.sym(other)).with_override(other, s.sym(target));
        }
        return s;
    }
};

/// |expr| < 1 at every analytic sample point.
struct Constraint {
    std::string text;
    std::function<BigRational(const Assignment&)> expr;
};

/// Deterministic generator for sample points.
class Rng {
public:
    explicit Rng(std::uint64_t seed, const std::string& salt = {});
    std::uint64_t next() { return gen_(); }
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 gen_;
};

template <class K>
using SideFn = std::function<TruncSeries<K>(const Scalars<K>&, int order, int instance)>;
using ValueFn = std::function<Ball(const Scalars<BigRational>&, const NumericConfig&, int instance)>;

struct IdentityCheck {
    std::string id;
    std::string anchor;
    Mode mode = Mode::Formal;
    std::vector<Sym> expansion_vars;
    /// Symbols that receive values at sampled or analytic points.
    std::vector<Sym> params;
    /// Symbols left symbolic under FormalSampled (operator variables).
    std::vector<Sym> keep_symbolic;
    /// Number of separately compared instances (e.g. n = 0..5).
    int instances = 1;
    std::string instance_name;

    // Formal sides. The BigRational pair is optional; without it FormalSampled
    // binds symbols inside RatFunc arithmetic.
    SideFn<RatFunc> lhs_sym, rhs_sym;
    SideFn<BigRational> lhs_num, rhs_num;

    // Analytic sides.
    std::vector<Constraint> constraints;
    /// Extra conditions used only to pick points where the left-hand sum converges.
    std::vector<Constraint> sampling_constraints;
    ValueFn lhs_value, rhs_value;
    std::function<Assignment(Rng&)> sampler;

    std::vector<Mutation> mutations;
    /// Convention notes carried into the report.
    std::vector<std::string> notes;
    /// True when the right-hand side was rejected by phi_formal at registry construction.
    bool rhs_not_formal = false;
};

struct CheckReport {
    std::string id;
    std::string anchor;
    Mode mode = Mode::Formal;
    int order = 0;
    std::uint64_t seed = 0;
    std::vector<Assignment> points;
    std::vector<Sym> point_symbols;
    Status status = Status::Pass;
    std::string reason;
    nlohmann::json witness;
    std::string mutation;
    std::vector<std::string> notes;
    double elapsed_ms = 0;
};

struct RunOptions {
    int order = 8;
    std::optional<Mode> mode_override;
    std::uint64_t seed = 0;
    int points = 5;
    BigRational eps = pow10_neg(25);
    NumericConfig numeric;
    /// Points supplied by configuration, by identity id; validated against constraints.
    std::map<std::string, std::vector<Assignment>> injected_points;
    int jobs = 1;
};

const std::vector<IdentityCheck>& registry();
const IdentityCheck& find_check(const std::string& id);
/// "all", "formal", "analytic", "reductions" or a comma-separated list of ids.
std::vector<const IdentityCheck*> select_checks(const std::string& suite);

CheckReport run_formal(const IdentityCheck& check, int order, bool sampled, std::uint64_t seed,
                       const Mutation* mutation = nullptr);
/// Throws DomainViolation when an injected point breaks a constraint.
CheckReport run_analytic(const IdentityCheck& check, const RunOptions& opt, const Mutation* mutation = nullptr);
CheckReport run_check(const IdentityCheck& check, const RunOptions& opt, const Mutation* mutation = nullptr);
/// Runs checks (optionally in parallel); reports are sorted by id.
std::vector<CheckReport> run_suite(const std::vector<const IdentityCheck*>& checks, const RunOptions& opt);
std::vector<CheckReport> run_reductions(const RunOptions& opt);

struct MutationResult {
    CheckReport base;
    /// First catalogued right-hand mutation whose report is a fail.
    std::optional<CheckReport> witness;
    /// The unmutated check passes and the mutation fails.
    bool flips() const { return base.status == Status::Pass && witness.has_value(); }
};
MutationResult mutation_witness(const IdentityCheck& check, const RunOptions& opt);

/// Sample points for an analytic check; deterministic in (seed, id).
std::vector<Assignment> sample_points(const IdentityCheck& check, std::uint64_t seed, int count);

inline constexpr int kReportSchemaVersion = 1;
nlohmann::json to_json(const CheckReport& r, bool stable);
nlohmann::json reports_to_json(const std::vector<CheckReport>& rs, bool stable);

} // namespace qident

#endif // QIDENT_VERIFY_HPP
