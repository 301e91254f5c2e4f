#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>

#include "dpar/api.hpp"
#include "dpar/recommend.hpp"
#include "dpar/strength.hpp"

namespace httplib {
class Server;
}

namespace dpar::service {

struct ServiceConfig {
  std::string model_path;
  std::string l33t_path;  // empty: built-in table
  std::string host = "127.0.0.1";
  int port = 8080;
  RecommenderConfig recommender;
  api::Variant variant = api::Variant::asterisks;
};

/// Parses a flat `key=value` file ('#' comments allowed). Known keys:
/// model_path, l33t_path, host, port, variant, repeat_count, min_strength,
/// dimension_priority, crack_rate, weak_max, fair_max, min_length,
/// require_letter, require_digit, require_symbol.
ServiceConfig parse_config(std::string_view text);
ServiceConfig load_config(const std::filesystem::path& path);

/// DPAR_MODEL_PATH, when set and non-empty, replaces config.model_path.
void apply_environment(ServiceConfig& config);

/// Line logger shared by request threads. Callers must never pass password
/// material; the service logs method, path and status only.
class Logger {
 public:
  explicit Logger(std::ostream& sink) : sink_(&sink) {}
  void info(std::string_view line);

 private:
  std::mutex mu_;
  std::ostream* sink_;
};

/// Loads a model and its l33t table from the paths in `config`. Throws on
/// failure, including a table whose hash differs from the model's.
std::shared_ptr<const Scorer> load_scorer(const ServiceConfig& config);

/// HTTP front end for analyze/recommend over one shared, immutable model.
class Service {
 public:
  Service(ServiceConfig config, Logger& logger);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Makes the service ready. Before this, /v1/health answers 503.
  void set_scorer(std::shared_ptr<const Scorer> scorer);
  bool ready() const;

  /// Binds to config.host. Port 0 picks a free port; returns the bound port
  /// or -1.
  int bind(int port);
  /// Blocks serving requests until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

  httplib::Server& server() noexcept { return *server_; }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  std::shared_ptr<const Scorer> scorer() const;
  void install_routes();

  ServiceConfig config_;
  Logger& logger_;
  std::unique_ptr<httplib::Server> server_;
  mutable std::mutex mu_;
  std::shared_ptr<const Scorer> scorer_;
};

}  // namespace dpar::service
