#include "blockerlab/exhaustive.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "blockerlab/ham_paths.hpp"

namespace blockerlab {

namespace {

using json = nlohmann::json;

// Advances c (strictly increasing indices below `limit`) to the next
// combination in lexicographic order; false after the last one.
bool next_combination(std::vector<int>& c, int limit) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == limit - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json edges_json(const EdgeSet& s) {
  json out = json::array();
  for (const Edge& e : s) out.push_back({e.a, e.b});
  return out;
}

EdgeSet edges_from_json(int n, const json& j) {
  std::vector<Edge> es;
  for (const auto& e : j) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return EdgeSet(n, std::move(es));
}

// Partitioned search over independent work units. Each unit appends the
// blockers it finds; units are merged in index order. Completed units are
// checkpointed through a single writer and skipped on resume.
class UnitRunner {
 public:
  using UnitFn = std::function<std::uint64_t(int unit, AvoidanceSearch&, std::vector<EdgeSet>&)>;

  UnitRunner(std::string method, int n, int units, const EnumerationOptions& opts)
      : method_(std::move(method)), n_(n), units_(units), opts_(opts), results_(units), done_(units, 0) {
    if (opts_.checkpoint && std::filesystem::exists(*opts_.checkpoint)) load(*opts_.checkpoint);
  }

  std::vector<EdgeSet> run(const UnitFn& fn) {
    std::vector<int> pending;
    for (int u = 0; u < units_; ++u)
      if (!done_[u]) pending.push_back(u);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        AvoidanceSearch search(n_);
        for (std::size_t i = next++; i < pending.size(); i = next++) {
          std::vector<EdgeSet> found;
          const std::uint64_t tested = fn(pending[i], search, found);
          complete(pending[i], std::move(found), tested);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = pending.size();
      }
    };

    const int workers = std::min<int>(resolve_workers(opts_.workers), std::max<std::size_t>(pending.size(), 1));
    std::vector<std::thread> threads;
    for (int w = 1; w < workers; ++w) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    if (opts_.checkpoint) save(*opts_.checkpoint);

    std::vector<EdgeSet> out;
    for (auto& r : results_) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void complete(int unit, std::vector<EdgeSet> found, std::uint64_t tested) {
    std::lock_guard lock(mutex_);
    results_[unit] = std::move(found);
    done_[unit] = 1;
    candidates_ += tested;
    since_save_ += tested;
    if (opts_.checkpoint && since_save_ >= opts_.checkpoint_interval) {
      save(*opts_.checkpoint);
      since_save_ = 0;
    }
  }

  void save(const std::filesystem::path& path) const {
    json units = json::object();
    for (int u = 0; u < units_; ++u) {
      if (!done_[u]) continue;
      json sets = json::array();
      for (const EdgeSet& s : results_[u]) sets.push_back(edges_json(s));
      units[std::to_string(u)] = std::move(sets);
    }
    const json state = {{"method", method_}, {"n", n_},         {"units", units_},
                        {"candidates", candidates_}, {"completed", std::move(units)}};
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp);
      out << state.dump() << '\n';
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }

  void load(const std::filesystem::path& path) {
    std::ifstream in(path);
    const json state = json::parse(in);
    if (state.at("method") != method_ || state.at("n") != n_ || state.at("units") != units_)
      throw std::invalid_argument("checkpoint " + path.string() + " belongs to a different run");
    candidates_ = state.at("candidates").get<std::uint64_t>();
    for (const auto& [key, sets] : state.at("completed").items()) {
      const int u = std::stoi(key);
      if (u < 0 || u >= units_) throw std::invalid_argument("checkpoint unit out of range");
      for (const auto& s : sets) results_[u].push_back(edges_from_json(n_, s));
      done_[u] = 1;
    }
  }

  std::string method_;
  int n_;
  int units_;
  EnumerationOptions opts_;
  std::vector<std::vector<EdgeSet>> results_;
  std::vector<char> done_;
  std::mutex mutex_;
  std::uint64_t candidates_ = 0;
  std::uint64_t since_save_ = 0;
};

void require_odd(int n, const char* what) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(what) + " requires odd n >= 3");
}

}  // namespace

MinBlockingResult min_blocking_size(int n, std::uint64_t budget) {
  if (n < 3) throw std::invalid_argument("min_blocking_size requires n >= 3");
  const std::vector<Edge> edges = all_edges(n);
  const int total = static_cast<int>(edges.size());
  MinBlockingResult result{n, std::nullopt, 0, std::nullopt};
  AvoidanceSearch search(n);
  std::vector<Edge> chosen;

  for (int size = 1; size <= total; ++size) {
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    do {
      if (result.candidates >= budget) return result;
      ++result.candidates;
      chosen.clear();
      for (int i : c) chosen.push_back(edges[i]);
      search.set_forbidden(chosen);
      if (!search.exists()) {
        result.size = size;
        result.example = EdgeSet(n, chosen);
        return result;
      }
    } while (next_combination(c, total));
  }
  return result;
}

std::vector<EdgeSet> enumerate_blockers_bruteforce(int n, const EnumerationOptions& opts) {
  require_odd(n, "enumerate_blockers_bruteforce");
  if (n > kMaxBruteForceOrder)
    throw std::invalid_argument("unpruned enumeration is limited to n <= " + std::to_string(kMaxBruteForceOrder));
  const int m = (n + 1) / 2;
  const std::vector<Edge> edges = all_edges(n);
  const int total = static_cast<int>(edges.size());

  // Unit u fixes the smallest edge index.
  UnitRunner runner("brute", n, total - m + 1, opts);
  return runner.run([&](int first, AvoidanceSearch& search, std::vector<EdgeSet>& out) {
    std::uint64_t tested = 0;
    std::vector<int> rest(m - 1);
    for (int i = 0; i < m - 1; ++i) rest[i] = first + 1 + i;
    std::vector<Edge> chosen(m);
    do {
      ++tested;
      chosen[0] = edges[first];
      for (int i = 0; i < m - 1; ++i) chosen[i + 1] = edges[rest[i]];
      search.set_forbidden(chosen);
      if (!search.exists()) out.emplace_back(n, chosen);
    } while (next_combination(rest, total));
    return tested;
  });
}

std::vector<EdgeSet> enumerate_blockers_pruned(int n, const EnumerationOptions& opts) {
  require_odd(n, "enumerate_blockers_pruned");
  if (n > kMaxPrunedOrder)
    throw std::invalid_argument("pruned enumeration is limited to n <= " + std::to_string(kMaxPrunedOrder));
  const int m = (n + 1) / 2;
  const int per_class = (n - 1) / 2;

  // classes[c][t-1] = D_{2c+2t-1}.
  std::vector<std::vector<std::vector<Edge>>> classes(n);
  for (int c = 0; c < n; ++c)
    for (int t = 1; t <= m; ++t) classes[c].push_back(parallel_class(n, 2 * c + 2 * t - 1));

  // Unit (c, first choice) = c * per_class + choice.
  UnitRunner runner("pruned", n, n * per_class, opts);
  return runner.run([&](int unit, AvoidanceSearch& search, std::vector<EdgeSet>& out) {
    const auto& cls = classes[unit / per_class];
    std::vector<int> pick(m, 0);
    pick[0] = unit % per_class;
    std::vector<Edge> chosen(m);
    std::uint64_t tested = 0;
    while (true) {
      ++tested;
      for (int t = 0; t < m; ++t) chosen[t] = cls[t][pick[t]];
      search.set_forbidden(chosen);
      if (!search.exists()) out.emplace_back(n, chosen);
      int t = m - 1;
      while (t >= 1 && ++pick[t] == per_class) pick[t--] = 0;
      if (t < 1) break;
    }
    return tested;
  });
}

std::string oracle_name(OracleMethod m) {
  switch (m) {
    case OracleMethod::kAuto: return "auto";
    case OracleMethod::kBruteForce: return "brute";
    case OracleMethod::kPruned: return "pruned";
  }
  return "unknown";
}

CharacterizationReport check_characterization(int n, OracleMethod method, const EnumerationOptions& opts) {
  require_odd(n, "check_characterization");
  if (method == OracleMethod::kAuto)
    method = n <= kMaxBruteForceOrder ? OracleMethod::kBruteForce : OracleMethod::kPruned;

  CharacterizationReport report;
  report.n = n;
  report.method = method;
  const std::vector<EdgeSet> oracle = method == OracleMethod::kBruteForce
                                          ? enumerate_blockers_bruteforce(n, opts)
                                          : enumerate_blockers_pruned(n, opts);

  std::map<EdgeSet, std::pair<bool, bool>> parametric;  // set -> (from A, from B)
  std::uint64_t descriptors = 0;
  for (const BlockerDescriptor& d : enumerate_descriptors(n)) {
    ++descriptors;
    auto& origin = parametric[generate(d)];
    if (std::holds_alternative<ClassAParams>(d)) {
      ++report.class_a_descriptors;
      origin.first = true;
    } else {
      ++report.class_b_descriptors;
      origin.second = true;
    }
  }
  for (const auto& [s, origin] : parametric) {
    report.class_a_sets += origin.first;
    report.class_b_sets += origin.second;
  }
  report.descriptor_collisions = descriptors - parametric.size();
  report.count_oracle = oracle.size();
  report.count_parametric = parametric.size();

  for (const EdgeSet& s : oracle) {
    if (parametric.count(s)) {
      ++report.agreement;
    } else {
      report.missing_from_parametric.push_back(s);
    }
  }
  for (const auto& [s, origin] : parametric)
    if (!std::binary_search(oracle.begin(), oracle.end(), s)) report.extra_in_parametric.push_back(s);
  return report;
}

}  // namespace blockerlab
