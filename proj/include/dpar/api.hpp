#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dpar/policy.hpp"
#include "dpar/recommend.hpp"
#include "dpar/strength.hpp"

namespace dpar::api {

/// How recommendation buttons are labeled.
enum class Variant { asterisks, num_changes, hack_time, feedback_only };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

/// "Your password is weak. Hackers may guess your password within 3 minutes."
std::string feedback_text(const StrengthReport& report);

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Body of /v1/analyze. 422 with the violation list on policy failure.
Response analyze(const Scorer& scorer, std::string_view password, const RecommenderConfig& config);

/// Body of /v1/recommend: the analyze fields plus `buttons`, `variant` and
/// the RNG used. 422 on policy failure. feedback_only yields no buttons.
Response recommend(const Scorer& scorer, std::string_view password, Variant variant,
                   const RecommenderConfig& config);

nlohmann::json model_meta(const Model& model);

/// Exact bytes written by both the CLI (--json) and the HTTP service.
inline std::string serialize(const nlohmann::json& body) { return body.dump(); }

}  // namespace dpar::api
