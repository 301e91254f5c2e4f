// dpar: train models, score and strengthen passwords, run the HTTP service.
//
// Exit codes: 0 ok, 1 I/O or configuration error, 2 password policy violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dpar/api.hpp"
#include "dpar/error.hpp"
#include "dpar/evaluate.hpp"
#include "dpar/model.hpp"
#include "dpar/recommend.hpp"
#include "dpar/service.hpp"
#include "dpar/strength.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPolicy = 2;

std::string fmt_bits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt_seconds(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::shared_ptr<const dpar::Scorer> open_scorer(const std::string& model, const std::string& l33t) {
  dpar::service::ServiceConfig cfg;
  cfg.model_path = model;
  cfg.l33t_path = l33t;
  return dpar::service::load_scorer(cfg);
}

void print_violations(const nlohmann::json& body) {
  for (const auto& v : body.at("violations")) {
    std::cout << "violation\t" << v.get<std::string>() << '\n';
  }
}

void print_report(const nlohmann::json& body) {
  std::cout << "PS\t" << fmt_bits(body.at("PS").get<double>()) << '\n'
            << "category\t" << body.at("category").get<std::string>() << '\n'
            << "crack_seconds\t" << fmt_seconds(body.at("crack_seconds").get<double>()) << '\n'
            << "crack_human\t" << body.at("crack_human").get<std::string>() << '\n'
            << "feedback\t" << body.at("feedback_text").get<std::string>() << '\n';
}

// ---------------------------------------------------------------------------

struct TrainArgs {
  std::string corpus;
  std::string l33t;
  std::uint64_t min_count = 1;
  std::string out;
};

int run_train(const TrainArgs& a) {
  std::ifstream in(a.corpus, std::ios::binary);
  if (!in) {
    std::cerr << "dpar train: cannot open corpus " << a.corpus << '\n';
    return kExitIo;
  }
  const auto table = a.l33t.empty() ? dpar::L33tTable::default_table() : dpar::L33tTable::load(a.l33t);
  dpar::TrainOptions options;
  options.min_count = a.min_count;
  auto result = dpar::train(in, table, options);
  dpar::save_model(result.model, a.out);
  std::cout << "lines\t" << result.stats.lines << '\n'
            << "accepted\t" << result.stats.accepted << '\n'
            << "skipped\t" << result.stats.skipped << '\n'
            << "passwords\t" << result.stats.passwords << '\n';
  return kExitOk;
}

struct ScoreArgs {
  std::string model;
  std::string l33t;
  std::string password;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string variant = "asterisks";
};

int run_analyze(const ScoreArgs& a) {
  const auto scorer = open_scorer(a.model, a.l33t);
  const auto response = dpar::api::analyze(*scorer, a.password, {});
  if (a.json) {
    std::cout << dpar::api::serialize(response.body) << '\n';
  } else if (response.status == 200) {
    print_report(response.body);
  } else {
    print_violations(response.body);
  }
  return response.status == 200 ? kExitOk : kExitPolicy;
}

int run_recommend(const ScoreArgs& a) {
  const auto variant = dpar::api::parse_variant(a.variant);
  if (!variant) {
    std::cerr << "dpar recommend: unknown variant " << a.variant << '\n';
    return kExitIo;
  }
  const auto scorer = open_scorer(a.model, a.l33t);
  dpar::RecommenderConfig config;
  config.seed = a.seed;
  const auto response = dpar::api::recommend(*scorer, a.password, *variant, config);
  if (a.json) {
    std::cout << dpar::api::serialize(response.body) << '\n';
    return response.status == 200 ? kExitOk : kExitPolicy;
  }
  if (response.status != 200) {
    print_violations(response.body);
    return kExitPolicy;
  }
  const auto& body = response.body;
  print_report(body);
  std::cout << "seed\t" << body.at("rng").at("seed").get<std::uint64_t>() << "\n\n";
  std::cout << "id\tlabel\tpassword\tPS\tcrack_human\tld\tmask_preview\n";
  for (const auto& b : body.at("buttons")) {
    std::cout << b.at("id").get<int>() << '\t' << b.at("label").get<std::string>() << '\t'
              << b.at("password").get<std::string>() << '\t' << fmt_bits(b.at("PS").get<double>())
              << '\t' << b.at("crack_human").get<std::string>() << '\t'
              << b.at("ld").get<std::size_t>() << '\t' << b.at("mask_preview").get<std::string>()
              << '\n';
  }
  return kExitOk;
}

struct EvalArgs {
  std::string model;
  std::string l33t;
  std::string sample;
  std::uint64_t seed = 0;
  std::size_t n = 1000;
  bool json = false;
};

int run_eval(const EvalArgs& a) {
  std::ifstream in(a.sample, std::ios::binary);
  if (!in) {
    std::cerr << "dpar eval: cannot open sample " << a.sample << '\n';
    return kExitIo;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  const auto scorer = open_scorer(a.model, a.l33t);
  const auto report = dpar::evaluate(*scorer, lines, a.seed, a.n);

  if (a.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"password", r.password},
                      {"orig_PS", r.original_bits},
                      {"best_PS", r.best_bits},
                      {"ld", r.distance}});
    }
    std::cout << nlohmann::json{{"rows", rows},
                                {"mean_improvement", report.mean_improvement},
                                {"min_improvement", report.min_improvement},
                                {"seed", a.seed}}
                     .dump()
              << '\n';
    return kExitOk;
  }
  std::cout << "password\torig_PS\tbest_PS\tld\n";
  for (const auto& r : report.rows) {
    std::cout << r.password << '\t' << fmt_bits(r.original_bits) << '\t' << fmt_bits(r.best_bits)
              << '\t' << r.distance << '\n';
  }
  std::cout << "mean_improvement\t" << fmt_bits(report.mean_improvement) << '\n'
            << "min_improvement\t" << fmt_bits(report.min_improvement) << '\n';
  return kExitOk;
}

struct ServeArgs {
  std::string config;
  std::string model;
  std::string host;
  int port = -1;
};

int run_serve(const ServeArgs& a) {
  dpar::service::ServiceConfig cfg;
  if (!a.config.empty()) cfg = dpar::service::load_config(a.config);
  if (!a.model.empty()) cfg.model_path = a.model;
  dpar::service::apply_environment(cfg);
  if (!a.host.empty()) cfg.host = a.host;
  if (a.port >= 0) cfg.port = a.port;

  dpar::service::Logger logger(std::cerr);
  dpar::service::Service service(cfg, logger);
  const int port = service.bind(cfg.port);
  if (port < 0) {
    std::cerr << "dpar serve: cannot bind " << cfg.host << ':' << cfg.port << '\n';
    return kExitIo;
  }
  logger.info("listening on " + cfg.host + ":" + std::to_string(port));

  int status = kExitOk;
  std::thread loader([&] {
    service.wait_until_ready();
    try {
      service.set_scorer(dpar::service::load_scorer(cfg));
      logger.info("model loaded");
    } catch (const std::exception& e) {
      logger.info(std::string("model load failed: ") + e.what());
      status = kExitIo;
      service.stop();
    }
  });
  service.listen_after_bind();
  loader.join();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data-driven password recommendations"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a model from a password corpus");
  train_cmd->add_option("--corpus", train.corpus, "Corpus file: password[<TAB>count] per line")
      ->required();
  train_cmd->add_option("--l33t", train.l33t, "l33t table (letter<TAB>symbol per line)");
  train_cmd->add_option("--min-count", train.min_count, "Drop base words seen fewer times");
  train_cmd->add_option("--out", train.out, "Model file to write")->required();

  ScoreArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print strength, category and crack time");
  analyze_cmd->add_option("--model", analyze.model)->required();
  analyze_cmd->add_option("--l33t", analyze.l33t, "l33t table the model was trained with");
  analyze_cmd->add_flag("--json", analyze.json, "Emit the /v1/analyze JSON body");
  analyze_cmd->add_option("password", analyze.password)->required();

  ScoreArgs rec;
  auto* rec_cmd = app.add_subcommand("recommend", "Print up to three recommendations");
  rec_cmd->add_option("--model", rec.model)->required();
  rec_cmd->add_option("--l33t", rec.l33t, "l33t table the model was trained with");
  rec_cmd->add_option("--seed", rec.seed);
  rec_cmd->add_option("--variant", rec.variant, "asterisks|num_changes|hack_time|feedback_only");
  rec_cmd->add_flag("--json", rec.json, "Emit the /v1/recommend JSON body");
  rec_cmd->add_option("password", rec.password)->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Measure strength improvement over a sample");
  eval_cmd->add_option("--model", eval.model)->required();
  eval_cmd->add_option("--l33t", eval.l33t, "l33t table the model was trained with");
  eval_cmd->add_option("--sample", eval.sample)->required();
  eval_cmd->add_option("--seed", eval.seed)->required();
  eval_cmd->add_option("--n", eval.n, "Passwords to evaluate");
  eval_cmd->add_flag("--json", eval.json);

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--config", serve.config, "key=value config file");
  serve_cmd->add_option("--model", serve.model);
  serve_cmd->add_option("--host", serve.host);
  serve_cmd->add_option("--port", serve.port);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }

  try {
    if (*train_cmd) return run_train(train);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*rec_cmd) return run_recommend(rec);
    if (*eval_cmd) return run_eval(eval);
    if (*serve_cmd) return run_serve(serve);
  } catch (const std::exception& e) {
    std::cerr << "dpar: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitIo;
}
