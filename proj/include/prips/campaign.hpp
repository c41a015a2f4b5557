#ifndef PRIPS_CAMPAIGN_HPP
#define PRIPS_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prips/io.hpp"
#include "prips/rips.hpp"

namespace prips {

/// n in [4, 30] distinct points, uniform on [0, 3]^2 at resolution 1/1000.
PointCloud random_cloud(std::uint64_t seed);

/// Exact rigid motion: rotation by the Pythagorean angle (3/5, 4/5), then a
/// translation.
PointCloud rotate_translate(const PointCloud& cloud, const Point2& shift);

struct NamedCloud {
    std::string name;
    PointCloud cloud;
};

/// Octahedra, cross-polytopes, chains and a ring, plus moved copies.
std::vector<NamedCloud> constructed_clouds();

enum class Suite { Lemmas, TheoremA, TheoremB, TheoremC, All };

const char* to_string(Suite suite);

/// Accepts lemmas, theoremA, theoremB, theoremC, all.
Suite parse_suite(std::string_view text);

struct CampaignConfig {
    Suite suite = Suite::All;
    std::uint64_t seed = 0;
    int count = 100;
    ThresholdMode mode = ThresholdMode::StrictLess;
    bool inject = true;
};

struct CheckTally {
    std::string name;
    std::size_t cases = 0;
    std::size_t non_vacuous = 0;
    std::size_t violations = 0;
    std::size_t capacity = 0;
    std::string first_violation;
};

struct CampaignReport {
    CampaignConfig config;
    std::size_t random_clouds = 0;
    std::size_t injected_clouds = 0;
    std::vector<CheckTally> checks;

    std::size_t violations() const;
    std::size_t capacity_skips() const;
    const CheckTally* find(std::string_view name) const;
};

/// Deterministic for a fixed config.
CampaignReport run_campaign(const CampaignConfig& config);

Json campaign_to_json(const CampaignReport& report);

}  // namespace prips

#endif  // PRIPS_CAMPAIGN_HPP
