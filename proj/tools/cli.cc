// Copyright 2026 The qwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subcommands:
//   walk       noise-free photon-number distribution M(N, k)
//   decohere   ensemble mean and standard error under phase/splitter noise
//   compare    network distribution against the classical or coined walk
//   resources  optical element tally for the dynamic-line or AOM layout
//
// CSV distribution output has header `k,value[,stderr]`, rows ascending in k,
// numbers printed with 12 significant digits. JSON output is an object with
// `meta` (the fully resolved configuration) and `data` (one object per row).

#include "cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "json.hpp"
#include "qwalk/analysis.h"
#include "qwalk/coined_walk.h"
#include "qwalk/decoherence.h"
#include "qwalk/optics.h"

namespace qwalk::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kCsv, kJson };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.12g}", v); }

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

// Options shared by every subcommand.
struct OutputOptions {
  std::string format = "csv";
  std::string output = "-";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("-o,--output", output, "Output path, '-' for stdout")
        ->capture_default_str();
  }
  Format resolved() const { return format == "json" ? Format::kJson : Format::kCsv; }
};

struct SplitterOptions {
  std::string theta = "pi/2";
  std::string phi = "-pi/2";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--theta", theta, "T1 splitter angle theta in radians")
        ->capture_default_str();
    cmd.add_option("--phi", phi, "T1 splitter phase phi in radians")
        ->capture_default_str();
  }
  BeamSplitterParams resolved() const {
    BeamSplitterParams p{parse_angle(theta), parse_angle(phi)};
    p.validate();
    return p;
  }
};

Json splitter_meta(const BeamSplitterParams& p) {
  return Json{{"theta", p.theta}, {"phi", p.phi}};
}

void require_steps(int steps) {
  if (steps < 1) throw UsageError("--steps must be >= 1");
}

// Rows of (k, columns...) for a distribution-shaped result.
struct Table {
  std::vector<std::string> columns;  // excluding "k"
  std::vector<std::pair<int, std::vector<double>>> rows;
};

void write_table(std::ostream& os, Format format, const Json& meta,
                 const Table& table, const Json* summary = nullptr) {
  if (format == Format::kCsv) {
    os << "k";
    for (const auto& c : table.columns) os << ',' << c;
    os << '\n';
    for (const auto& [k, values] : table.rows) {
      os << k;
      for (double v : values) os << ',' << num(v);
      os << '\n';
    }
    if (summary != nullptr) {
      for (const auto& [key, value] : summary->items()) {
        if (value.is_object()) {
          for (const auto& [sub, v] : value.items()) {
            os << "# " << key << '.' << sub << '=' << num(v.get<double>())
               << '\n';
          }
        } else {
          os << "# " << key << '=' << num(value.get<double>()) << '\n';
        }
      }
    }
    return;
  }
  Json doc;
  doc["meta"] = meta;
  Json data = Json::array();
  for (const auto& [k, values] : table.rows) {
    Json row;
    row["k"] = k;
    for (std::size_t c = 0; c < values.size(); ++c) {
      row[table.columns[c]] = values[c];
    }
    data.push_back(std::move(row));
  }
  doc["data"] = std::move(data);
  if (summary != nullptr) doc["summary"] = *summary;
  os << doc.dump(2) << '\n';
}

Json moments_json(const Distribution& d) {
  const Moments m = moments(d);
  return Json{{"mean", m.mean}, {"variance", m.variance}, {"std", m.std}};
}

// Writes to stdout or a file; the content is built first so a failing
// computation never leaves a truncated file behind.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_number(s);

  double sign = 1.0;
  std::string_view head = s.substr(0, pi_pos);
  std::string_view tail = s.substr(pi_pos + 2);
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    if (head.front() == '-') sign = -1.0;
    head.remove_prefix(1);
  }
  double factor = 1.0;
  if (!head.empty()) {
    if (head.back() != '*') {
      throw std::invalid_argument("bad angle '" + std::string(text) + "'");
    }
    head.remove_suffix(1);
    factor = parse_number(head);
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') {
      throw std::invalid_argument("bad angle '" + std::string(text) + "'");
    }
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) {
      throw std::invalid_argument("division by zero in '" + std::string(text) + "'");
    }
  }
  return sign * factor * std::numbers::pi / divisor;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum walks as interference of field amplitudes in a "
               "beam-splitter network",
               "qwalk"};
  app.require_subcommand(1);

  // walk
  int walk_steps = 0;
  double walk_alpha2 = 1.0;
  SplitterOptions walk_t1;
  OutputOptions walk_out;
  CLI::App* walk = app.add_subcommand("walk", "Noise-free distribution M(N,k)");
  walk->add_option("--steps", walk_steps, "Number of steps N")->required();
  walk->add_option("--alpha-squared", walk_alpha2,
                   "Scale by the input mean photon number |alpha|^2")
      ->capture_default_str();
  walk_t1.add_to(*walk);
  walk_out.add_to(*walk);

  // decohere
  int dec_steps = 0;
  double dec_alpha2 = 1.0;
  unsigned dec_threads = 0;
  std::string dec_mode = "fresh";
  std::string dec_sharing = "per-mode";
  NoiseConfig dec_cfg;
  SplitterOptions dec_t1;
  OutputOptions dec_out;
  CLI::App* decohere =
      app.add_subcommand("decohere", "Ensemble average under random phases "
                                     "and splitter transmittivities");
  decohere->add_option("--steps", dec_steps, "Number of steps N")->required();
  decohere->add_option("--sigma-pp", dec_cfg.sigma_pp,
                       "Std-dev of the phase-shifter draw l ~ N(1, sigma)")
      ->capture_default_str();
  decohere->add_option("--sigma-bs", dec_cfg.sigma_bs,
                       "Std-dev of the splitter draw m ~ N(1, sigma)")
      ->capture_default_str();
  decohere->add_option("--trials", dec_cfg.trials, "Number of trials")
      ->capture_default_str();
  decohere->add_option("--seed", dec_cfg.master_seed, "Master seed")
      ->capture_default_str();
  decohere->add_option("--mode", dec_mode, "Randomness: fresh or fixed")
      ->check(CLI::IsMember({"fresh", "fixed"}))
      ->capture_default_str();
  decohere->add_option("--sharing", dec_sharing,
                       "Phase draws per mode or one per layer")
      ->check(CLI::IsMember({"per-mode", "per-step"}))
      ->capture_default_str();
  decohere->add_option("--threads", dec_threads,
                       "Worker threads (0 = hardware); output is unaffected")
      ->capture_default_str();
  decohere->add_option("--alpha-squared", dec_alpha2,
                       "Scale by the input mean photon number |alpha|^2")
      ->capture_default_str();
  dec_t1.add_to(*decohere);
  dec_out.add_to(*decohere);

  // compare
  int cmp_steps = 0;
  std::string cmp_against = "coined";
  SplitterOptions cmp_t1;
  OutputOptions cmp_out;
  CLI::App* compare = app.add_subcommand(
      "compare", "Compare the network with a classical or coined walk");
  compare->add_option("--steps", cmp_steps, "Number of steps N")->required();
  compare->add_option("--against", cmp_against, "classical or coined")
      ->check(CLI::IsMember({"classical", "coined"}))
      ->capture_default_str();
  cmp_t1.add_to(*compare);
  cmp_out.add_to(*compare);

  // resources
  int res_steps = 0;
  std::string res_layout = "line";
  OutputOptions res_out;
  CLI::App* resources =
      app.add_subcommand("resources", "Optical element count per layout");
  resources->add_option("--steps", res_steps, "Number of steps N")->required();
  resources->add_option("--layout", res_layout, "line or aom")
      ->check(CLI::IsMember({"line", "aom"}))
      ->capture_default_str();
  res_out.add_to(*resources);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "qwalk: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    std::ostringstream text;
    std::string path;

    if (walk->parsed()) {
      require_steps(walk_steps);
      const BeamSplitterParams t1 = walk_t1.resolved();
      const PhotonDistribution m = photon_distribution(propagate(walk_steps, t1));
      const auto scaled = scale_to_input(m, walk_alpha2);
      Json meta{{"command", "walk"}, {"steps", walk_steps},
                {"t1", splitter_meta(t1)}, {"alpha_squared", walk_alpha2}};
      Table table{{"value"}, {}};
      for (const auto& [k, v] : scaled) table.rows.push_back({k, {v}});
      write_table(text, walk_out.resolved(), meta, table);
      path = walk_out.output;
    } else if (decohere->parsed()) {
      require_steps(dec_steps);
      const BeamSplitterParams t1 = dec_t1.resolved();
      dec_cfg.randomness =
          dec_mode == "fixed" ? Randomness::kFixed : Randomness::kFresh;
      dec_cfg.phase_sharing = dec_sharing == "per-step" ? PhaseSharing::kPerStep
                                                        : PhaseSharing::kPerMode;
      dec_cfg.validate();
      if (!(dec_alpha2 >= 0.0)) throw UsageError("--alpha-squared must be >= 0");
      const EnsembleResult r = run_ensemble(dec_steps, t1, dec_cfg, dec_threads);
      const auto scaled = scale_to_input(r.mean, dec_alpha2);
      Json meta{{"command", "decohere"},
                {"steps", dec_steps},
                {"t1", splitter_meta(t1)},
                {"sigma_pp", dec_cfg.sigma_pp},
                {"sigma_bs", dec_cfg.sigma_bs},
                {"trials", dec_cfg.trials},
                {"seed", dec_cfg.master_seed},
                {"mode", dec_mode},
                {"sharing", dec_sharing},
                {"alpha_squared", dec_alpha2}};
      Table table{{"value", "stderr"}, {}};
      for (const auto& [k, v] : scaled) {
        table.rows.push_back({k, {v, r.stderr_of_mean.at(k) * dec_alpha2}});
      }
      write_table(text, dec_out.resolved(), meta, table);
      path = dec_out.output;
    } else if (compare->parsed()) {
      require_steps(cmp_steps);
      const BeamSplitterParams t1 = cmp_t1.resolved();
      const PhotonDistribution m = photon_distribution(propagate(cmp_steps, t1));
      const Distribution reference =
          cmp_against == "classical"
              ? classical_distribution(cmp_steps)
              : walk_distribution(cmp_steps, coin_for_t1(t1));
      Json meta{{"command", "compare"}, {"steps", cmp_steps},
                {"t1", splitter_meta(t1)}, {"against", cmp_against}};
      Table table{{"value", "reference"}, {}};
      for (int k = -cmp_steps; k <= cmp_steps; k += 2) {
        table.rows.push_back({k, {m.at(k), reference.at(k)}});
      }
      Json summary{{"tv_distance", tv_distance(m, reference)},
                   {"value", moments_json(m)},
                   {"reference", moments_json(reference)}};
      write_table(text, cmp_out.resolved(), meta, table, &summary);
      path = cmp_out.output;
    } else if (resources->parsed()) {
      require_steps(res_steps);
      const Layout layout =
          res_layout == "aom" ? Layout::kAomLoop : Layout::kDynamicLine;
      const ResourceCount rc = resource_count(res_steps, layout);
      if (res_out.resolved() == Format::kCsv) {
        text << "layout,n_steps,beam_splitters,phase_shifters,aoms,detectors\n"
             << layout_name(rc.layout) << ',' << rc.n_steps << ','
             << rc.beam_splitters << ',' << rc.phase_shifters << ','
             << rc.aoms << ',' << rc.detectors << '\n';
      } else {
        Json doc;
        doc["meta"] = Json{{"command", "resources"},
                           {"steps", res_steps},
                           {"layout", res_layout}};
        doc["data"] = Json::array({Json{{"layout", layout_name(rc.layout)},
                                        {"n_steps", rc.n_steps},
                                        {"beam_splitters", rc.beam_splitters},
                                        {"phase_shifters", rc.phase_shifters},
                                        {"aoms", rc.aoms},
                                        {"detectors", rc.detectors}}});
        text << doc.dump(2) << '\n';
      }
      path = res_out.output;
    }
    emit(path, out, text.str());
    return kExitOk;
  } catch (const UsageError& e) {
    err << "qwalk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // domain_error / invalid_argument from validation
    err << "qwalk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qwalk: error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace qwalk::cli
