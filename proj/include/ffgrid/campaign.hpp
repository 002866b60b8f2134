#pragma once

#include "ffgrid/caps.hpp"
#include "ffgrid/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ffgrid {

// Identifiers accepted by run_campaign, in display order:
// T1 .. T11, P1, COR.
const std::vector<std::string>& campaign_ids();
std::string campaign_title(const std::string& id);

struct CampaignConfig {
    std::string id;
    std::uint64_t seed = 0;
    unsigned threads = 0; // 0: hardware concurrency
    std::optional<int> nmax;
    std::optional<int> vmax;
    std::optional<std::uint64_t> samples;
    std::vector<NamedProduct> products; // T2 / T7; empty means the defaults
    Caps caps;
};

struct CampaignReport {
    std::string id;
    std::string title;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;    // summary lines for the text report
    std::vector<std::string> problems; // first few failure descriptions
    nlohmann::json summary = nlohmann::json::object();
    nlohmann::json records = nlohmann::json::array();

    bool passed() const noexcept { return failures == 0; }
};

// Runs one campaign. Every random instance draws from its own generator
// seeded by (seed, instance index), so the report does not depend on the
// thread count. Throws Error on an unknown id.
CampaignReport run_campaign(const CampaignConfig& config);

std::string format_report_text(const CampaignReport& report);
nlohmann::json report_json(const CampaignReport& report, const CampaignConfig& config);

// Calls body(i) for i in [0, count) on `threads` workers (0: hardware
// concurrency). The first exception thrown by a body is rethrown after
// every worker has stopped.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace ffgrid
