#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "torres/io.hpp"
#include "torres/oracle.hpp"

using namespace torres;

namespace {

constexpr const char* kVersion = "torres 0.1.0";

enum Exit { kPass = 0, kMismatch = 1, kInput = 2, kDegenerate = 3 };

struct SearchSpec {
  std::size_t n = 2;
  std::optional<std::uint32_t> p;
  bool special_linear = false;
  bool nonabelian = false;
  std::optional<std::size_t> kill;
  std::optional<std::size_t> limit;
};

struct JobOptions {
  std::optional<std::string> pd, pd_file, braid;
  int strands = 0;
  std::size_t component = 0;
  std::string ring;
  std::string rep_file;
  bool trivial = false;
  std::string search;
  std::string format = "text";
  std::string cache;
};

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
  }
  if (pos != value.size() || v < 0) throw InputError("bad value for " + key + ": '" + value + "'");
  return static_cast<std::size_t>(v);
}

SearchSpec parse_search(const std::string& text) {
  SearchSpec s;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    if (token.empty()) continue;
    auto eq = token.find('=');
    auto key = token.substr(0, eq);
    auto value = eq == std::string::npos ? std::string() : token.substr(eq + 1);
    if (key == "sl" && eq == std::string::npos) {
      s.special_linear = true;
    } else if (key == "nonabelian" && eq == std::string::npos) {
      s.nonabelian = true;
    } else if (key == "n" && eq != std::string::npos) {
      s.n = parse_count(key, value);
    } else if (key == "p" && eq != std::string::npos) {
      s.p = static_cast<std::uint32_t>(RingSpec::parse("F" + value).p);
    } else if (key == "kill" && eq != std::string::npos) {
      auto k = parse_count(key, value);
      if (k == 0) throw InputError("kill is a 1-based component index");
      s.kill = k - 1;
    } else if (key == "limit" && eq != std::string::npos) {
      s.limit = parse_count(key, value);
    } else {
      throw InputError("unknown search parameter '" + token + "'");
    }
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_braid(const std::string& text) {
  std::vector<int> word;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int g = 0;
    try {
      g = std::stoi(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    while (pos < token.size() && token[pos] == ' ') ++pos;
    if (pos != token.size() || token.empty()) throw InputError("bad braid letter '" + token + "'");
    word.push_back(g);
  }
  return word;
}

/// Canonical PD text of the selected link source.
std::string link_text(const JobOptions& o) {
  const int sources = o.pd.has_value() + o.pd_file.has_value() + o.braid.has_value();
  if (sources != 1) throw InputError("give exactly one of --pd, --pd-file, --braid");
  if (o.braid) {
    auto word = parse_braid(*o.braid);
    int strands = o.strands;
    if (strands == 0) {
      for (int g : word) strands = std::max(strands, std::abs(g) + 1);
      strands = std::max(strands, 1);
    }
    return to_string(braid_to_pd(word, strands));
  }
  auto text = o.pd ? *o.pd : read_file(*o.pd_file);
  return to_string(parse_pd(text));
}

std::size_t component_index(const JobOptions& o, const LinkDiagram& d) {
  if (o.component == 0) return d.component_count() - 1;
  if (o.component > d.component_count()) {
    throw InputError("component " + std::to_string(o.component) + " out of range 1.." +
                     std::to_string(d.component_count()));
  }
  return o.component - 1;
}

enum class RepSource { trivial, file, search };

RepSource rep_source(const JobOptions& o) {
  const int sources = o.trivial + !o.rep_file.empty() + !o.search.empty();
  if (sources > 1) throw InputError("give at most one of --trivial, --rep, --search");
  if (!o.rep_file.empty()) return RepSource::file;
  if (!o.search.empty()) return RepSource::search;
  return RepSource::trivial;
}

/// Ring from --ring, the representation file or the search prime; they must agree.
RingSpec job_ring(const JobOptions& o, const std::optional<Json>& rep_json, const std::optional<SearchSpec>& search) {
  std::optional<RingSpec> ring;
  auto merge = [&](RingSpec r, const char* from) {
    if (ring && !(*ring == r)) throw InputError(std::string("ring from ") + from + " conflicts with " + ring->name());
    ring = r;
  };
  if (!o.ring.empty()) merge(RingSpec::parse(o.ring), "--ring");
  if (rep_json) merge(representation_ring(*rep_json), "--rep");
  if (search) {
    if (search->p) {
      merge(RingSpec::parse("F" + std::to_string(*search->p)), "--search");
    } else if (!ring || ring->kind != RingKind::prime_field) {
      throw InputError("--search needs p=<prime> or --ring F<p>");
    }
  }
  return ring.value_or(RingSpec::parse("Q"));
}

template <class R>
std::vector<Representation<R>> searched(const WirtingerPresentation& pres, const R& ring, const SearchSpec& s,
                                        std::size_t default_limit) {
  if constexpr (R::kind == RingKind::prime_field) {
    SearchConstraints sc;
    sc.kill_component = s.kill;
    sc.special_linear = s.special_linear;
    sc.nonabelian = s.nonabelian;
    return search_reps(pres, s.n, ring, sc, s.limit.value_or(default_limit));
  } else {
    throw InputError("representation search needs a prime field");
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

template <class R>
std::string cache_key(const std::string& pd, std::size_t comp, const Representation<R>& rho_Lp) {
  Json j;
  j["pd"] = pd;
  j["component"] = comp + 1;
  j["rep"] = to_json(rho_Lp);
  return sha256_hex(j.dump());
}

class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        auto j = Json::parse(line);
        records_.emplace(j.at("key").get<std::string>(), j.at("report"));
      } catch (const nlohmann::json::exception&) {
        throw InputError("corrupt cache line in " + path_);
      }
    }
  }

  bool enabled() const { return !path_.empty(); }

  const Json* find(const std::string& key) const {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
  }

  void append(const std::string& key, const Json& report) {
    if (!enabled() || records_.count(key)) return;
    std::ofstream out(path_, std::ios::app);
    Json line;
    line["key"] = key;
    line["version"] = kVersion;
    line["report"] = report;
    out << line.dump() << '\n';
    records_.emplace(key, report);
  }

 private:
  std::string path_;
  std::map<std::string, Json> records_;
};

void print_report(const Json& r) {
  std::cout << "link: " << r["link"].get<std::string>() << '\n'
            << "component: " << r["component"] << '\n'
            << "ring: " << r["ring"].get<std::string>() << ", n: " << r["n"] << '\n'
            << "case: " << r["case"].get<std::string>() << '\n'
            << "lhs: (" << r["lhs_num"].get<std::string>() << ") / (" << r["lhs_den"].get<std::string>() << ")\n"
            << "rhs: (" << r["rhs_factor"].get<std::string>() << ") * (" << r["rhs_num"].get<std::string>()
            << ") / (" << r["rhs_den"].get<std::string>() << ")\n"
            << "result: " << (r["pass"].get<bool>() ? "PASS" : "MISMATCH") << '\n';
  if (!r["pass"].get<bool>()) {
    std::cout << "note: a mismatch on valid input contradicts the Torres formula and indicates an implementation bug\n";
  }
}

int cmd_invariant(const JobOptions& o) {
  const auto pd = link_text(o);
  const auto d = diagram_from_pd(pd);
  const auto pres = wirtinger(d);
  const auto source = rep_source(o);
  std::optional<Json> rep_json;
  std::optional<SearchSpec> search;
  if (source == RepSource::file) rep_json = read_json(o.rep_file);
  if (source == RepSource::search) search = parse_search(o.search);
  return visit_ring(job_ring(o, rep_json, search), [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    std::vector<Representation<R>> reps;
    if (source == RepSource::trivial) reps.push_back(trivial_rep(pres, ring));
    if (source == RepSource::file) reps.push_back(representation_from_json(ring, *rep_json));
    if (source == RepSource::search) reps = searched(pres, ring, *search, 1);
    for (const auto& rep : reps) {
      auto report = validate(rep, pres);
      if (!report.ok()) throw InputError("representation does not satisfy the link relators");
      auto t = wada(pres, make_evaluator(rep, pres));
      auto [num, den] = canonical_pair(t.value.reduced());
      if (o.format == "json") {
        Json j;
        j["pd"] = pd;
        j["ring"] = ring_spec(ring).name();
        j["n"] = rep.n;
        j["num"] = to_string(num);
        j["den"] = to_string(den);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "num: " << to_string(num) << ", den: " << to_string(den) << '\n';
      }
    }
    if (reps.empty()) std::cerr << "no representation found\n";
    return int(kPass);
  });
}

/// Sublink representations for a torres job; files may describe L' or L with K_mu killed.
template <class R>
std::vector<Representation<R>> sublink_reps(const LinkDiagram& d, std::size_t comp, const R& ring, RepSource source,
                                            const std::optional<Json>& rep_json,
                                            const std::optional<SearchSpec>& search) {
  auto deletion = delete_component(d, comp);
  const auto sub = wirtinger(deletion.sub_diagram);
  if (source == RepSource::trivial) return {trivial_rep(sub, ring)};
  if (source == RepSource::file) {
    auto rep = representation_from_json(ring, *rep_json);
    if (rep.images.size() == sub.generator_count) return {rep};
    if (rep.images.size() == d.arc_count()) return {restrict_to_sublink(rep, deletion)};
    throw InputError("representation has " + std::to_string(rep.images.size()) + " images; expected " +
                     std::to_string(sub.generator_count) + " (sublink) or " + std::to_string(d.arc_count()) +
                     " (link)");
  }
  auto s = *search;
  if (s.kill && *s.kill != comp) throw InputError("kill must name the deleted component");
  s.kill.reset();
  return searched(sub, ring, s, 1);
}

struct Record {
  Json json;
  int exit = kPass;
  std::optional<std::string> key;
  bool cached = false;
};

template <class R>
Record torres_record(const std::string& name, const std::string& pd, const LinkDiagram& d, std::size_t comp,
                     const Representation<R>& rep, const Cache& cache) {
  Record rec;
  if (cache.enabled()) {
    rec.key = cache_key(pd, comp, rep);
    if (const Json* hit = cache.find(*rec.key)) {
      rec.json = *hit;
      rec.json["link"] = name;
      rec.cached = true;
      rec.exit = rec.json["pass"].get<bool>() ? kPass : kMismatch;
      return rec;
    }
  }
  auto report = torres_check(d, comp, rep);
  rec.json = to_json(report, name);
  rec.exit = report.pass ? kPass : kMismatch;
  return rec;
}

Record error_record(const std::string& name, const char* kind, const std::string& message, int exit) {
  Record rec;
  rec.json["link"] = name;
  rec.json["error"] = kind;
  rec.json["message"] = message;
  rec.exit = exit;
  return rec;
}

int worst(int a, int b) {
  // Mismatch dominates, then input errors, then degenerate cases.
  auto rank = [](int e) { return e == kMismatch ? 3 : e == kInput ? 2 : e == kDegenerate ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int cmd_torres(const JobOptions& o) {
  const auto pd = link_text(o);
  const auto d = diagram_from_pd(pd);
  const auto comp = component_index(o, d);
  const auto source = rep_source(o);
  std::optional<Json> rep_json;
  std::optional<SearchSpec> search;
  if (source == RepSource::file) rep_json = read_json(o.rep_file);
  if (source == RepSource::search) search = parse_search(o.search);
  Cache cache(o.cache);
  return visit_ring(job_ring(o, rep_json, search), [&](const auto& ring) {
    auto reps = sublink_reps(d, comp, ring, source, rep_json, search);
    if (reps.empty()) {
      std::cerr << "no representation found\n";
      return int(kPass);
    }
    int code = kPass;
    for (const auto& rep : reps) {
      auto rec = torres_record(pd, pd, d, comp, rep, cache);
      if (rec.key) cache.append(*rec.key, rec.json);
      if (o.format == "json") {
        std::cout << rec.json.dump() << '\n';
      } else {
        print_report(rec.json);
      }
      code = worst(code, rec.exit);
    }
    return code;
  });
}

int cmd_search(const JobOptions& o, const std::string& out_dir) {
  if (o.search.empty()) throw InputError("search-reps needs --search");
  const auto pd = link_text(o);
  const auto pres = wirtinger(diagram_from_pd(pd));
  auto search = parse_search(o.search);
  return visit_ring(job_ring(o, std::nullopt, search), [&](const auto& ring) {
    auto reps = searched(pres, ring, search, 0);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (std::size_t k = 0; k < reps.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "rep_%05zu.json", k + 1);
        std::ofstream out(std::filesystem::path(out_dir) / name);
        out << to_json(reps[k]).dump(2) << '\n';
        if (!out) throw InputError("cannot write " + (std::filesystem::path(out_dir) / name).string());
      }
    }
    std::cout << "count: " << reps.size() << '\n';
    return int(kPass);
  });
}

template <class F>
Record guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const DegenerateError& e) {
    return error_record(name, "degenerate", e.what(), kDegenerate);
  } catch (const InternalError& e) {
    return error_record(name, "internal", e.what(), kMismatch);
  } catch (const Error& e) {
    return error_record(name, "input", e.what(), kInput);
  }
}

int cmd_batch(const JobOptions& o, const std::string& table_path, std::size_t jobs) {
  const auto table = parse_table(read_json(table_path));
  const auto source = rep_source(o);
  if (source == RepSource::file) throw InputError("batch takes --trivial or --search");
  std::optional<SearchSpec> search;
  if (source == RepSource::search) search = parse_search(o.search);
  const auto ring_spec_ = job_ring(o, std::nullopt, search);
  Cache cache(o.cache);

  std::vector<std::vector<Record>> results(table.size());
  auto run = [&](std::size_t i) {
    const auto& entry = table[i];
    std::vector<Record> out;
    std::optional<LinkDiagram> d;
    std::string pd;
    auto rec = guarded(entry.name, [&] {
      pd = to_string(parse_pd(entry.pd));
      d = diagram_from_pd(pd);
      if (entry.components && *entry.components != d->component_count()) {
        throw InputError("expected " + std::to_string(*entry.components) + " components, found " +
                         std::to_string(d->component_count()));
      }
      return Record{};
    });
    if (rec.json.contains("error")) {
      out.push_back(std::move(rec));
    } else {
      const std::size_t comp = o.component == 0 ? d->component_count() - 1 : o.component - 1;
      visit_ring(ring_spec_, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        std::vector<Representation<R>> reps;
        auto err = guarded(entry.name, [&] {
          if (comp >= d->component_count()) throw InputError("component out of range");
          reps = sublink_reps(*d, comp, ring, source, std::nullopt, search);
          return Record{};
        });
        if (err.json.contains("error")) {
          out.push_back(std::move(err));
          return;
        }
        for (const auto& rep : reps) {
          out.push_back(guarded(entry.name, [&] { return torres_record(entry.name, pd, *d, comp, rep, cache); }));
        }
      });
    }
    results[i] = std::move(out);
  };

  jobs = std::max<std::size_t>(1, std::min(jobs, table.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < table.size(); i = next++) run(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kPass;
  std::map<std::string, std::size_t> counts;
  std::size_t records = 0, hits = 0;
  for (const auto& batch : results) {
    for (const auto& rec : batch) {
      ++records;
      std::cout << rec.json.dump() << '\n';
      if (rec.cached) ++hits;
      if (rec.key && !rec.cached) cache.append(*rec.key, rec.json);
      if (rec.json.contains("error")) {
        ++counts["error_" + rec.json["error"].get<std::string>()];
      } else {
        ++counts[rec.json["pass"].get<bool>() ? "pass" : "mismatch"];
        ++counts[rec.json["case"].get<std::string>()];
      }
      code = worst(code, rec.exit);
    }
  }
  std::cerr << "summary: records=" << records << " cache_hits=" << hits;
  for (const auto& [k, v] : counts) std::cerr << ' ' << k << '=' << v;
  std::cerr << '\n';
  return code;
}

int cmd_oracle(std::vector<std::string> suites, std::uint64_t seed) {
  if (suites.empty()) suites = {"det", "fox", "lk", "normalize", "units"};
  int code = kPass;
  for (const auto& s : suites) {
    OracleReport r;
    if (s == "det") {
      r = det_suite(200, seed);
    } else if (s == "fox") {
      r = fox_suite(1000, seed);
    } else if (s == "lk") {
      r = lk_suite();
    } else if (s == "normalize") {
      r = normalize_suite(1000, seed);
    } else if (s == "units") {
      r = units_suite(500, seed);
    } else {
      throw InputError("unknown oracle suite '" + s + "' (det, fox, lk, normalize, units)");
    }
    std::cout << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
              << r.failures.size() << " failures)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    if (!r.ok()) code = kMismatch;
  }
  return code;
}

void add_link_options(CLI::App* cmd, JobOptions& o) {
  cmd->add_option("--pd", o.pd, "PD code, e.g. \"X[1,3,2,4] X[3,1,4,2]\"");
  cmd->add_option("--pd-file", o.pd_file, "file holding a PD code");
  cmd->add_option("--braid", o.braid, "braid word as comma-separated generator indices, e.g. \"1,1,-2\"");
  cmd->add_option("--strands", o.strands, "strand count for --braid (default: smallest that fits)");
}

void add_rep_options(CLI::App* cmd, JobOptions& o) {
  cmd->add_option("--ring", o.ring, "coefficient ring: Z, Q or F<p> (default Q)");
  cmd->add_option("--rep", o.rep_file, "representation file");
  cmd->add_flag("--trivial", o.trivial, "use the trivial 1-dimensional representation (default)");
  cmd->add_option("--search", o.search, "search parameters, e.g. \"n=2,p=5,sl,nonabelian,limit=3\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Reidemeister torsion of links and Torres formula checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  JobOptions o;
  std::size_t jobs = 1;
  std::string out_dir, table;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;

  auto* inv = app.add_subcommand("invariant", "print the torsion of a link as num/den");
  add_link_options(inv, o);
  add_rep_options(inv, o);
  inv->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* tor = app.add_subcommand("torres", "check the twisted Torres formula for one component");
  add_link_options(tor, o);
  add_rep_options(tor, o);
  tor->add_option("--component", o.component, "1-based component to delete (default: last)");
  tor->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  tor->add_option("--cache", o.cache, "JSONL result cache");

  auto* srch = app.add_subcommand("search-reps", "enumerate representations over a prime field");
  add_link_options(srch, o);
  srch->add_option("--ring", o.ring, "prime field F<p>, alternative to p= in --search");
  srch->add_option("--search", o.search, "search parameters, e.g. \"n=2,p=5,sl,nonabelian,kill=2\"")->required();
  srch->add_option("--out", out_dir, "directory to write rep_NNNNN.json files into");

  auto* bat = app.add_subcommand("batch", "check every link of a JSON table");
  bat->add_option("table", table, "link table JSON")->required();
  add_rep_options(bat, o);
  bat->add_option("--component", o.component, "1-based component to delete (default: last)");
  bat->add_option("--cache", o.cache, "JSONL result cache");
  bat->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* ora = app.add_subcommand("oracle", "run oracle cross-checks");
  ora->add_option("suites", suites, "det, fox, lk, normalize, units (default: all)");
  ora->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*inv) return cmd_invariant(o);
    if (*tor) return cmd_torres(o);
    if (*srch) return cmd_search(o, out_dir);
    if (*bat) return cmd_batch(o, table, jobs);
    if (*ora) return cmd_oracle(suites, seed);
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
