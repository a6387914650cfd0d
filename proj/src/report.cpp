#include "ktb/report.hpp"

#include <json.hpp>

namespace ktb {

std::string format_partition(const std::vector<std::size_t>& block_of)
{
    std::string out;
    for (std::size_t i = 0; i < block_of.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(block_of[i]);
    }
    return out;
}

std::string report_to_json(const Report& r, const Frame& names_from, JsonOptions opts)
{
    nlohmann::ordered_json j;
    j["lemma"] = r.lemma;
    j["frame"] = r.frame;
    j["mode"] = r.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
    if (r.mode == CheckMode::sampled)
        j["seed"] = r.seed;
    j["cases"] = r.cases;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.counterexample) {
        nlohmann::ordered_json c;
        for (const auto& [name, s] : r.counterexample->sets) {
            nlohmann::ordered_json members = nlohmann::ordered_json::array();
            s.for_each([&](std::size_t v) {
                members.push_back(v < names_from.size() ? names_from.name(v) : std::to_string(v));
            });
            c["sets"][name] = members;
        }
        if (!r.counterexample->partition.empty())
            c["partition"] = format_partition(r.counterexample->partition);
        if (!r.counterexample->reason.empty())
            c["reason"] = r.counterexample->reason;
        j["counterexample"] = c;
    }
    if (!r.note.empty())
        j["note"] = r.note;
    for (const auto& [k, v] : r.details)
        j["details"][k] = v;
    if (opts.include_timing)
        j["millis"] = r.millis;
    return j.dump();
}

} // namespace ktb
