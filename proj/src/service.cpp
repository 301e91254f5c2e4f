#include "dpar/service.hpp"

#include <chrono>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "dpar/error.hpp"

namespace dpar::service {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw FormatError("config: bad value for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw FormatError("config: bad boolean for " + std::string(key));
}

}  // namespace

ServiceConfig parse_config(std::string_view text) {
  ServiceConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto& rc = cfg.recommender;

    if (key == "model_path") {
      cfg.model_path = value;
    } else if (key == "l33t_path") {
      cfg.l33t_path = value;
    } else if (key == "host") {
      cfg.host = value;
    } else if (key == "port") {
      cfg.port = parse_number<int>(key, value);
    } else if (key == "variant") {
      auto v = api::parse_variant(value);
      if (!v) throw FormatError("config: unknown variant '" + std::string(value) + "'");
      cfg.variant = *v;
    } else if (key == "repeat_count") {
      rc.repeat_count = parse_number<std::size_t>(key, value);
    } else if (key == "min_strength") {
      rc.min_strength = parse_number<double>(key, value);
    } else if (key == "dimension_priority") {
      rc.dimension_priority = parse_priority(value);
    } else if (key == "crack_rate") {
      rc.strength.crack_rate = parse_number<double>(key, value);
    } else if (key == "weak_max") {
      rc.strength.thresholds.weak_max = parse_number<double>(key, value);
    } else if (key == "fair_max") {
      rc.strength.thresholds.fair_max = parse_number<double>(key, value);
    } else if (key == "min_length") {
      rc.policy.min_length = parse_number<std::size_t>(key, value);
    } else if (key == "require_letter") {
      rc.policy.require_letter = parse_bool(key, value);
    } else if (key == "require_digit") {
      rc.policy.require_digit = parse_bool(key, value);
    } else if (key == "require_symbol") {
      rc.policy.require_symbol = parse_bool(key, value);
    } else {
      throw FormatError("config: unknown key '" + std::string(key) + "'");
    }
  }
  validate(cfg.recommender);
  return cfg;
}

ServiceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_environment(ServiceConfig& config) {
  if (const char* p = std::getenv("DPAR_MODEL_PATH"); p != nullptr && *p != '\0') {
    config.model_path = p;
  }
}

void Logger::info(std::string_view line) {
  std::lock_guard lock(mu_);
  *sink_ << line << '\n';
  sink_->flush();
}

std::shared_ptr<const Scorer> load_scorer(const ServiceConfig& config) {
  if (config.model_path.empty()) throw IoError("no model path configured");
  auto model = std::make_shared<const Model>(load_model(config.model_path));
  L33tTable table = config.l33t_path.empty() ? L33tTable::default_table()
                                             : L33tTable::load(config.l33t_path);
  if (table.hash_hex() != model->meta().l33t_hash) {
    throw Error("model was trained with a different l33t table (hash " +
                model->meta().l33t_hash + ")");
  }
  return std::make_shared<const Scorer>(std::move(model), std::move(table));
}

// ---------------------------------------------------------------------------

Service::Service(ServiceConfig config, Logger& logger)
    : config_(std::move(config)), logger_(logger), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

Service::~Service() { stop(); }

void Service::set_scorer(std::shared_ptr<const Scorer> scorer) {
  std::lock_guard lock(mu_);
  scorer_ = std::move(scorer);
}

std::shared_ptr<const Scorer> Service::scorer() const {
  std::lock_guard lock(mu_);
  return scorer_;
}

bool Service::ready() const { return scorer() != nullptr; }

int Service::bind(int port) {
  if (port == 0) return server_->bind_to_any_port(config_.host);
  return server_->bind_to_port(config_.host, port) ? port : -1;
}

bool Service::listen_after_bind() { return server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

void Service::wait_until_ready() const { server_->wait_until_ready(); }

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(api::serialize(body), "application/json");
}

struct ParsedRequest {
  std::string password;
  std::optional<api::Variant> variant;
  std::optional<std::uint64_t> seed;
};

// Error messages are fixed strings: nothing from the request body is echoed.
std::optional<ParsedRequest> parse_request(const std::string& body, std::string& error) {
  const json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    error = "malformed JSON";
    return std::nullopt;
  }
  ParsedRequest req;
  auto pw = doc.find("password");
  if (pw == doc.end() || !pw->is_string()) {
    error = "field 'password' must be a string";
    return std::nullopt;
  }
  req.password = pw->get<std::string>();
  if (auto v = doc.find("variant"); v != doc.end() && !v->is_null()) {
    if (!v->is_string() || !(req.variant = api::parse_variant(v->get<std::string>()))) {
      error = "field 'variant' must be one of asterisks, num_changes, hack_time, feedback_only";
      return std::nullopt;
    }
  }
  if (auto s = doc.find("seed"); s != doc.end() && !s->is_null()) {
    if (!s->is_number_unsigned()) {
      error = "field 'seed' must be a non-negative integer";
      return std::nullopt;
    }
    req.seed = s->get<std::uint64_t>();
  }
  return req;
}

}  // namespace

void Service::install_routes() {
  auto& srv = *server_;

  srv.set_logger([this](const httplib::Request& req, const httplib::Response& res) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %s %d", req.method.c_str(), req.path.c_str(), res.status);
    logger_.info(line);
  });

  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    send(res, 500, {{"error", "internal error"}});
  });

  srv.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
    auto s = scorer();
    if (!s) {
      send(res, 503, {{"status", "loading"}});
      return;
    }
    send(res, 200, {{"status", "ok"}, {"model_meta", api::model_meta(s->model())}});
  });

  const auto with_request = [this](auto&& handler) {
    return [this, handler](const httplib::Request& req, httplib::Response& res) {
      auto s = scorer();
      if (!s) {
        send(res, 503, {{"error", "model not loaded"}});
        return;
      }
      std::string error;
      auto parsed = parse_request(req.body, error);
      if (!parsed) {
        send(res, 400, {{"error", error}});
        return;
      }
      const auto response = handler(*s, *parsed);
      send(res, response.status, response.body);
    };
  };

  srv.Post("/v1/analyze", with_request([this](const Scorer& s, const ParsedRequest& req) {
             return api::analyze(s, req.password, config_.recommender);
           }));

  srv.Post("/v1/recommend", with_request([this](const Scorer& s, const ParsedRequest& req) {
             RecommenderConfig rc = config_.recommender;
             rc.seed = req.seed;
             return api::recommend(s, req.password, req.variant.value_or(config_.variant), rc);
           }));
}

}  // namespace dpar::service
