#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"
#include "lpc/instances.hpp"
#include "lpc/params.hpp"
#include "lpc/star_domain.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lpc {

enum class CheckId { Bp, BpDomain, Bathtub, Mixed, Pp, Bmvm, T1vmv, Taux, Lnf, Lvnp, Main, Chain, Remark };
const char* to_string(CheckId id) noexcept;
CheckId check_from_string(const std::string& s);
std::vector<CheckId> all_checks();
GeneratorKind default_generator(CheckId id);

/// Quadrature sizes shared by every check.
struct Resolution {
    int circle_nodes = 1024;
    int sphere_theta = 64;
    int sphere_phi = 128;
    int field_nodes = 257;     // per axis, n = 2
    int field_nodes_3d = 65;   // per axis, n = 3
    int levels = 64;           // level sets in the chain

    Resolution doubled() const;
    GridPtr directions(int n) const;
    int nodes(int n) const { return n == 2 ? field_nodes : field_nodes_3d; }
    nlohmann::json to_json() const;
};

struct InstanceSpec {
    GeneratorKind kind = GeneratorKind::RandomPolygon;
    std::uint64_t seed = 0;
    int n = 2;
    Resolution res;
    double R = 20.0;          // truncation radius of G extremals with lambda < 1
    bool transform = false;   // compose with a random determinant-one map
};

struct Instance {
    InstanceSpec spec;
    nlohmann::json descriptor;
    std::optional<ConvexBody> K, L;
    std::optional<CompactDomain> M;
    std::vector<Vec> star;   // star-shaped polygon, counter-clockwise
    std::optional<Field> f, g;
    bool extremal = false;
    bool truncated = false;   // g is an extremal cut at radius R
};

/// Deterministic in (spec, params); params fix the extremal profiles.
Instance random_instance(const InstanceSpec& spec, const ParamSet& ps);

struct ChainLink {
    std::string name;
    double value;
};

struct DeficitReport {
    CheckId id = CheckId::Bp;
    std::uint64_t seed = 0;
    ParamSet params;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
    double slack = 0.0;
    bool pass = false;                           // deficit >= 1 - slack
    std::optional<std::pair<double, double>> band;   // expected deficit range at equality cases
    bool in_band = true;
    std::vector<ChainLink> links;
    bool links_ordered = true;
    std::optional<double> deficit_doubled;
    std::string error;
    nlohmann::json instance;
    nlohmann::json resolution;
    nlohmann::json extras = nlohmann::json::object();
    double time_ms = 0.0;

    bool ok() const { return pass && in_band && links_ordered && error.empty(); }
};

inline constexpr double kSlackSet = 1e-3;
inline constexpr double kSlackFunction = 1e-2;
inline constexpr double kSlackTruncated = 3e-2;
inline constexpr double kSlackChain = 1e-9;

double default_slack(CheckId id);

struct CheckOptions {
    std::optional<double> slack;   // overrides the default
    bool doubling = false;         // repeat at doubled resolution
};

DeficitReport check_inequality(CheckId id, const InstanceSpec& spec, const ParamSet& ps, const CheckOptions& opt = {});
DeficitReport check_instance(CheckId id, const Instance& inst, const ParamSet& ps, const CheckOptions& opt = {});

/// Reports for seeds base .. base + count - 1, in seed order. Numeric errors
/// are caught into the failing report.
std::vector<DeficitReport> run_batch(CheckId id, const InstanceSpec& base, int count, const ParamSet& ps,
                                     const CheckOptions& opt = {});

/// Ten lambda values above 1 and ten in (n/(n+p), 1) away from the guards.
std::vector<double> lambda_grid(int n, double p);

std::vector<DeficitReport> sweep(CheckId id, const InstanceSpec& base, int seeds, const ParamSet& ps,
                                 const std::vector<double>& lambdas, const CheckOptions& opt = {});

nlohmann::json to_json(const DeficitReport& r, bool timing = false);
void write_jsonl(std::ostream& os, const std::vector<DeficitReport>& reports, bool timing = false);
void write_csv(std::ostream& os, const std::vector<DeficitReport>& reports, bool timing = false);

/// Volume of Gamma_2 of the unit square from a Monte Carlo estimate of its second moments.
double monte_carlo_centroid_volume_square(std::size_t samples, std::uint64_t seed);

}  // namespace lpc
