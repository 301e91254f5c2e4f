#include "dpar/api.hpp"

namespace dpar::api {

using nlohmann::json;

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::asterisks: return "asterisks";
    case Variant::num_changes: return "num_changes";
    case Variant::hack_time: return "hack_time";
    case Variant::feedback_only: return "feedback_only";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : {Variant::asterisks, Variant::num_changes, Variant::hack_time,
                    Variant::feedback_only}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::string feedback_text(const StrengthReport& report) {
  std::string text = "Your password is ";
  text += to_string(report.category);
  text += ". ";
  if (report.crack_human.rfind("less than", 0) == 0) {
    text += "Hackers may guess your password in " + report.crack_human + ".";
  } else if (report.crack_human.rfind("more than", 0) == 0) {
    text += "Hackers may need " + report.crack_human + " to guess your password.";
  } else {
    text += "Hackers may guess your password within " + report.crack_human + ".";
  }
  return text;
}

namespace {

json violations_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (Violation v : violations) out.push_back(to_string(v));
  return out;
}

std::optional<Response> policy_failure(std::string_view password, const RecommenderConfig& config) {
  if (!config.enforce_policy) return std::nullopt;
  const auto policy = validate_policy(password, config.policy);
  if (policy.valid) return std::nullopt;
  return Response{422, {{"valid", false}, {"violations", violations_json(policy.violations)}}};
}

json report_json(const StrengthReport& report) {
  return {
      {"valid", true},
      {"violations", json::array()},
      {"PS", report.bits},
      {"category", to_string(report.category)},
      {"crack_seconds", report.crack_seconds},
      {"crack_human", report.crack_human},
      {"feedback_text", feedback_text(report)},
  };
}

std::string label_for(const Recommendation& r, Variant v) {
  switch (v) {
    case Variant::asterisks: return r.labels.asterisks;
    case Variant::num_changes: return r.labels.num_changes;
    case Variant::hack_time: return r.labels.hack_time;
    case Variant::feedback_only: break;
  }
  return {};
}

}  // namespace

Response analyze(const Scorer& scorer, std::string_view password, const RecommenderConfig& config) {
  if (auto failure = policy_failure(password, config)) return *failure;
  const auto parts = scorer.parse(password);
  return {200, report_json(scorer.report(parts, config.strength))};
}

Response recommend(const Scorer& scorer, std::string_view password, Variant variant,
                   const RecommenderConfig& config) {
  if (auto failure = policy_failure(password, config)) return *failure;
  const auto result = dpar::recommend(scorer, password, config);

  json body = report_json(result.report);
  body["variant"] = to_string(variant);
  body["rng"] = {{"algorithm", Rng::kAlgorithm}, {"seed", result.seed}};
  json buttons = json::array();
  if (variant != Variant::feedback_only) {
    for (std::size_t i = 0; i < result.buttons.size(); ++i) {
      const auto& r = result.buttons[i];
      buttons.push_back({
          {"id", i + 1},
          {"label", label_for(r, variant)},
          {"password", r.password},
          {"PS", r.bits},
          {"crack_human", r.crack_human},
          {"ld", r.distance},
          {"mask_preview", r.mask_preview},
      });
    }
  }
  body["buttons"] = std::move(buttons);
  return {200, std::move(body)};
}

json model_meta(const Model& model) {
  return {
      {"corpus_lines", model.meta().corpus_lines},
      {"l33t_hash", model.meta().l33t_hash},
      {"format_version", kModelFormatVersion},
  };
}

}  // namespace dpar::api
