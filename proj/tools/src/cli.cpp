// Copyright 2026 The ci-mirror Authors.
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
#include "cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "cimirror/bps.hpp"
#include "cimirror/errors.hpp"
#include "cimirror/genus1.hpp"
#include "cimirror/suites.hpp"

namespace cimirror::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultMaxDegree = 10;
constexpr int kProgressThreshold = 50;

struct Table {
  MultiDegree md;
  std::string kind;
  int order = 0;
  std::map<int, std::string> values;
};

class Progress {
 public:
  Progress(std::ostream& err, bool enabled, std::size_t total) : err_(err), enabled_(enabled), total_(total) {}
  void done(const std::string& label, double seconds) {
    if (!enabled_) return;
    std::lock_guard lock(mutex_);
    ++finished_;
    err_ << "[" << finished_ << "/" << total_ << "] " << label << " " << seconds << "s\n" << std::flush;
  }

 private:
  std::ostream& err_;
  bool enabled_;
  std::size_t total_;
  std::size_t finished_ = 0;
  std::mutex mutex_;
};

// Runs work(i) for i in [0, count) on up to jobs threads. Results are
// written by index, so the caller's ordering is independent of scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  const std::size_t width = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (width <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<MultiDegree> selected(const RunConfig& c, std::ostream& err) {
  if (c.multidegree && c.dim) raise(ErrorKind::InvalidArgument, "--a and --dim are mutually exclusive");
  if (c.multidegree) {
    MultiDegree md = MultiDegree::parse(*c.multidegree);
    if (md.dropped_ones() > 0) {
      err << "warning: dropped " << md.dropped_ones() << " degree-1 component(s); using " << md.to_string() << "\n";
    }
    return {md};
  }
  if (c.dim) {
    if (*c.dim < 0) raise(ErrorKind::InvalidArgument, "--dim must be >= 0");
    return enumerate_cy(*c.dim);
  }
  raise(ErrorKind::InvalidArgument, c.command + " needs --a or --dim");
}

int max_degree(const RunConfig& c, int fallback) {
  const int d = c.max_degree.value_or(fallback);
  if (d < 1) raise(ErrorKind::InvalidArgument, "--max-degree must be >= 1");
  return d;
}

Table make_table(const MultiDegree& md, std::string kind, int order, const DegreeTable& values) {
  Table t{md, std::move(kind), order, {}};
  for (const auto& [d, v] : values) t.values.emplace(d, to_string(v));
  return t;
}

Json to_json(const Table& t) {
  Json j;
  j["multidegree"] = t.md.degrees();
  j["n"] = t.md.n();
  j["dim"] = t.md.dim();
  Json table = Json::object();
  for (const auto& [d, v] : t.values) table[std::to_string(d)] = v;
  j["table"] = std::move(table);
  j["kind"] = t.kind;
  j["order"] = t.order;
  return j;
}

void write_tables(const std::vector<Table>& tables, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    out << "multidegree,d,value\n";
    for (const auto& t : tables) {
      for (const auto& [d, v] : t.values) out << '"' << t.md.csv() << "\"," << d << ',' << v << '\n';
    }
    return;
  }
  if (tables.size() == 1) {
    out << to_json(tables.front()).dump(2) << '\n';
    return;
  }
  Json arr = Json::array();
  for (const auto& t : tables) arr.push_back(to_json(t));
  out << arr.dump(2) << '\n';
}

int run_tables(const RunConfig& c, std::ostream& out, std::ostream& err, bool bps) {
  const auto mds = selected(c, err);
  const int D = max_degree(c, kDefaultMaxDegree);
  std::shared_ptr<const BpsKernel> kernel;
  if (bps) {
    if (c.kernel) {
      kernel = find_kernel(*c.kernel);
    }
    for (const auto& md : mds) {
      auto k = kernel ? kernel : default_kernel(md.dim());
      if (!k) {
        raise(ErrorKind::DimensionMismatch, "no BPS kernel for dimension " + std::to_string(md.dim()) +
                                                " (" + md.to_string() + "); pass --kernel to use a registered one");
      }
      if (k->dimension() != md.dim()) {
        raise(ErrorKind::DimensionMismatch, "kernel " + k->name() + " is for dimension " +
                                                std::to_string(k->dimension()) + ", got " + md.to_string());
      }
    }
  }
  std::vector<std::optional<Table>> slots(mds.size());
  Progress progress(err, D > kProgressThreshold, mds.size());
  parallel_for(mds.size(), c.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    HyperContext ctx(mds[i], D, c.w_order);
    if (bps) {
      auto k = kernel ? kernel : default_kernel(mds[i].dim());
      slots[i] = make_table(mds[i], "bps", D, bps_genus1(ctx, *k).values);
    } else {
      slots[i] = make_table(mds[i], "gw", D, gw_genus1(ctx).values);
    }
    progress.done(mds[i].to_string(), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  });
  std::vector<Table> tables;
  for (auto& t : slots) tables.push_back(std::move(*t));
  write_tables(tables, c.format.value_or(Format::Json), out);
  return 0;
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& ch : r.checks) {
    Json j;
    j["suite"] = r.suite;
    j["subject"] = ch.subject;
    j["name"] = ch.name;
    j["passed"] = ch.passed;
    j["order"] = ch.order;
    if (ch.first_failure) {
      j["first_failure"] = {{"degree", ch.first_failure->degree},
                            {"w_power", ch.first_failure->w_power},
                            {"expected", ch.first_failure->expected},
                            {"actual", ch.first_failure->actual}};
    }
    if (!ch.note.empty()) j["note"] = ch.note;
    checks.push_back(std::move(j));
  }
  return checks;
}

std::vector<MultiDegree> all_dims(int lo, int hi) {
  std::vector<MultiDegree> out;
  for (int d = lo; d <= hi; ++d) {
    auto v = enumerate_cy(d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_suite(c.suite);
  const bool all = c.suite == "all";
  const bool explicit_set = c.multidegree || c.dim;
  std::vector<std::function<VerificationReport()>> tasks;
  std::vector<std::string> labels;
  auto add = [&](std::string label, std::function<VerificationReport()> f) {
    labels.push_back(std::move(label));
    tasks.push_back(std::move(f));
  };
  auto per_md = [&](const std::string& suite, const std::vector<MultiDegree>& mds, int order,
                    VerificationReport (*fn)(const MultiDegree&, int, std::optional<int>)) {
    for (const auto& md : mds) {
      add(suite + " " + md.to_string(), [fn, md, order, w = c.w_order] { return fn(md, order, w); });
    }
  };
  if (all || c.suite == "identities") {
    per_md("identities", explicit_set ? selected(c, err) : all_dims(0, 5), max_degree(c, 12), &identities_suite);
  }
  if (all || c.suite == "pipelines") {
    per_md("pipelines", explicit_set ? selected(c, err) : all_dims(0, 5), max_degree(c, 12), &pipelines_suite);
  }
  if (all || c.suite == "elliptic") {
    const int order = max_degree(c, 30);
    add("elliptic", [order] { return elliptic_suite(order); });
  }
  if (all || c.suite == "fixtures") {
    std::vector<int> dims;
    if (c.dim) {
      dims.push_back(*c.dim);
    } else if (c.multidegree) {
      dims.push_back(MultiDegree::parse(*c.multidegree).dim());
    } else {
      dims = {3, 4, 5};
    }
    for (int d : dims) add("fixtures dim " + std::to_string(d), [d] { return fixtures_suite(d); });
  }
  if (all || c.suite == "integrality") {
    const int order = max_degree(c, 50);
    std::vector<MultiDegree> mds = explicit_set ? selected(c, err) : enumerate_cy(3);
    for (const auto& md : mds) {
      if (!default_kernel(md.dim())) {
        if (all) continue;
        raise(ErrorKind::DimensionMismatch, "no BPS kernel for dimension " + std::to_string(md.dim()));
      }
      add("integrality " + md.to_string(), [md, order] { return integrality_suite(md, order); });
    }
  }

  std::vector<VerificationReport> results(tasks.size());
  Progress progress(err, c.max_degree.value_or(0) > kProgressThreshold, tasks.size());
  parallel_for(tasks.size(), c.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    results[i] = tasks[i]();
    progress.done(labels[i], std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  });

  VerificationReport merged{c.suite, {}};
  for (const auto& r : results) merged.merge(r);
  if (c.format.value_or(Format::Text) == Format::Json) {
    Json j;
    j["suite"] = c.suite;
    j["passed"] = merged.passed();
    j["checks"] = Json::array();
    for (const auto& r : results) {
      for (auto& item : report_json(r)) j["checks"].push_back(std::move(item));
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) out << format_human(r);
    out << (merged.passed() ? "PASS" : "FAIL") << ": " << merged.checks.size() - merged.failures() << "/"
        << merged.checks.size() << " checks passed\n";
  }
  return merged.passed() ? 0 : 1;
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  std::vector<MultiDegree> mds;
  if (c.dim) {
    if (*c.dim < 0) raise(ErrorKind::InvalidArgument, "--dim must be >= 0");
    mds = enumerate_cy(*c.dim);
  } else {
    mds = all_dims(0, 5);
  }
  const Format f = c.format.value_or(Format::Text);
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& md : mds) arr.push_back({{"multidegree", md.degrees()}, {"n", md.n()}, {"l", md.l()}, {"dim", md.dim()}});
    out << arr.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "multidegree,n,l,dim\n";
    for (const auto& md : mds) out << '"' << md.csv() << "\"," << md.n() << ',' << md.l() << ',' << md.dim() << '\n';
  } else {
    for (const auto& md : mds) out << md.to_string() << '\n';
  }
  return 0;
}

int run_fixtures(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.validate) {
    RunConfig v = c;
    v.suite = "fixtures";
    return run_verify(v, out, err);
  }
  std::vector<int> dims = c.dim ? std::vector<int>{*c.dim} : std::vector<int>{3, 4, 5};
  std::vector<Table> tables;
  for (int d : dims) {
    const FixtureSet fx = fixtures(d);
    for (const auto& md : fx.multidegrees()) {
      Table t{md, "bps", fx.max_degree(), {}};
      for (const auto& row : fx.rows) {
        if (row.md == md) t.values.emplace(row.degree, row.value.get_str());
      }
      tables.push_back(std::move(t));
    }
  }
  write_tables(tables, c.format.value_or(Format::Csv), out);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.jobs < 1) raise(ErrorKind::InvalidArgument, "--jobs must be >= 1");
    if (config.command == "enumerate") return run_enumerate(config, out);
    if (config.command == "gw") return run_tables(config, out, err, false);
    if (config.command == "bps") return run_tables(config, out, err, true);
    if (config.command == "verify") return run_verify(config, out, err);
    if (config.command == "fixtures") return run_fixtures(config, out, err);
    raise(ErrorKind::InvalidArgument, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-1 Gromov-Witten and BPS invariants of Calabi-Yau complete intersections"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

  auto common = [&](CLI::App* sub, bool with_md) {
    if (with_md) sub->add_option("--a", config.multidegree, "multidegree, e.g. 2,2,3");
    sub->add_option("--dim", config.dim, "all multidegrees of this dimension");
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto computing = [&](CLI::App* sub) {
    sub->add_option("--max-degree,--order", config.max_degree, "truncation degree");
    sub->add_option("--w-order", config.w_order, "w-jet order (default n+2)");
    sub->add_option("--jobs", config.jobs, "worker threads across multidegrees");
  };

  auto* en = app.add_subcommand("enumerate", "list Calabi-Yau multidegrees");
  common(en, false);
  auto* gw = app.add_subcommand("gw", "genus-1 GW invariants");
  common(gw, true);
  computing(gw);
  auto* bp = app.add_subcommand("bps", "genus-1 BPS numbers");
  common(bp, true);
  computing(bp);
  bp->add_option("--kernel", config.kernel, "BPS kernel name (default: built-in for the dimension)");
  auto* ve = app.add_subcommand("verify", "run identity suites");
  common(ve, true);
  computing(ve);
  ve->add_option("--suite", config.suite, "identities, pipelines, elliptic, fixtures, integrality or all");
  auto* fx = app.add_subcommand("fixtures", "print stored BPS tables");
  common(fx, false);
  fx->add_flag("--validate", config.validate, "diff against the engine through the registered kernels");
  fx->add_option("--jobs", config.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  config.command = app.get_subcommands().front()->get_name();
  if (!format.empty()) config.format = formats.at(format);
  return run(config, out, err);
}

}  // namespace cimirror::cli
