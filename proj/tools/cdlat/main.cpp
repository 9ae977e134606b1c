// cdlat: Chermak-Delgado measures, lattices, condition sweeps, and
// theorem-level verification for small finite groups.
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cdlat/catalog.hpp"
#include "cdlat/cd.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/families.hpp"
#include "cdlat/graph.hpp"
#include "cdlat/group.hpp"
#include "cdlat/subgroup.hpp"
#include "cdlat/verify.hpp"

namespace {

std::vector<cdlat::CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cdlat::MissingCatalog("cannot open catalog file " + path);
  return cdlat::parse_catalog(in);
}

// Apply fn to every index in [0, count) across a few worker threads; results
// land in their input slots, so output order never depends on scheduling.
template <typename Fn>
void indexed_parallel_for(size_t count, Fn fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        fn(i);
    });
  for (std::thread& t : pool) t.join();
}

int cmd_measure(const std::string& spec) {
  const cdlat::Group g = cdlat::build_group(spec);
  const cdlat::SubgroupLattice lat = cdlat::enumerate_subgroups(g);
  const cdlat::CDReport rep = cdlat::cd_lattice(g, lat);
  std::cout << "group: " << g.name << "\n"
            << "order: " << g.n << "\n"
            << "subgroups: " << rep.total_subgroups << "\n"
            << "m*: " << rep.m_star << "\n"
            << "|CD|: " << rep.members.size() << "\n"
            << "delta: " << rep.delta << "\n";
  return 0;
}

int cmd_delta_table(const std::vector<std::string>& specs) {
  struct Row {
    std::string name;
    std::string subgroups, m_star, delta;  // text so failures can be marked
    bool failed = false;
  };
  std::vector<Row> rows(specs.size());
  indexed_parallel_for(specs.size(), [&](size_t i) {
    Row& r = rows[i];
    try {
      const cdlat::Group g = cdlat::build_group(specs[i]);
      const cdlat::SubgroupLattice lat = cdlat::enumerate_subgroups(g);
      const cdlat::CDReport rep = cdlat::cd_lattice(g, lat);
      r.name = g.name;
      r.subgroups = std::to_string(rep.total_subgroups);
      r.m_star = std::to_string(rep.m_star);
      r.delta = std::to_string(rep.delta);
    } catch (const std::exception& ex) {
      r.name = specs[i];
      r.subgroups = std::string("error: ") + ex.what();
      r.failed = true;
    }
  });
  size_t name_w = 5, sub_w = 9, m_w = 2;
  for (const Row& r : rows) {
    name_w = std::max(name_w, r.name.size());
    if (r.failed) continue;
    sub_w = std::max(sub_w, r.subgroups.size());
    m_w = std::max(m_w, r.m_star.size());
  }
  const auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::cout << pad("group", name_w) << "  " << pad("subgroups", sub_w) << "  "
            << pad("m*", m_w) << "  delta\n";
  bool any_failed = false;
  for (const Row& r : rows) {
    std::cout << pad(r.name, name_w) << "  ";
    if (r.failed) {
      std::cout << r.subgroups << "\n";
      any_failed = true;
    } else {
      std::cout << pad(r.subgroups, sub_w) << "  " << pad(r.m_star, m_w)
                << "  " << r.delta << "\n";
    }
  }
  return any_failed ? 2 : 0;
}

int cmd_sweep_conditions(int order, const std::string& catalog_path,
                         const std::string& out_path) {
  const std::vector<cdlat::CatalogEntry> entries = load_catalog(catalog_path);
  std::vector<const cdlat::CatalogEntry*> selected;
  for (const cdlat::CatalogEntry& e : entries)
    if (e.order == order) selected.push_back(&e);
  if (selected.empty())
    throw cdlat::MissingCatalog("catalog has no entries of order " +
                                std::to_string(order));
  std::vector<cdlat::SweepRecord> records;
  std::vector<std::string> failures;
  {
    std::vector<cdlat::SweepRecord> slots(selected.size());
    std::vector<std::string> errors(selected.size());
    indexed_parallel_for(selected.size(), [&](size_t i) {
      try {
        slots[i] = cdlat::analyze_entry(*selected[i]);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    });
    for (size_t i = 0; i < selected.size(); ++i) {
      if (errors[i].empty()) {
        records.push_back(std::move(slots[i]));
      } else {
        failures.push_back("entry order " +
                           std::to_string(selected[i]->order) + " id " +
                           std::to_string(selected[i]->id) +
                           " failed: " + errors[i]);
      }
    }
  }
  std::ofstream out(out_path);
  if (!out)
    throw cdlat::Error("cannot open output file " + out_path);
  cdlat::write_report(records, out);
  if (!out.good())
    throw cdlat::Error("failed writing output file " + out_path);

  std::vector<std::string> passers;
  for (const cdlat::SweepRecord& r : records)
    if (r.cond1 && r.cond2 && r.cond3) passers.push_back(r.name);
  std::cout << "order " << order << ": " << records.size() << " groups, "
            << passers.size() << " pass all conditions\n";
  if (!passers.empty()) {
    std::cout << "pass:";
    for (const std::string& p : passers) std::cout << " " << p;
    std::cout << "\n";
  }
  std::cout << "report: " << out_path << "\n";
  for (const std::string& f : failures) std::cerr << f << "\n";
  return failures.empty() ? 0 : 2;
}

void print_verdict(const cdlat::TheoremVerdict& v) {
  std::cout << "theorem: " << cdlat::theorem_name(v.theorem) << "\n";
  if (v.scope.size() == 1) {
    std::cout << "scope: order " << v.scope[0] << "\n";
  } else {
    std::cout << "scope: orders " << v.scope.front() << ".." << v.scope.back()
              << "\n";
  }
  std::cout << "holds: " << (v.holds ? "yes" : "no") << "\n";
  for (const auto& [order, id] : v.counterexamples)
    std::cout << "counterexample: order " << order << " id " << id << "\n";
  for (const std::string& n : v.notes) std::cout << "note: " << n << "\n";
}

int cmd_verify(const std::string& theorem, const std::string& catalog_path,
               int max_order) {
  const std::vector<cdlat::CatalogEntry> entries = load_catalog(catalog_path);
  cdlat::TheoremVerdict v;
  if (theorem == "up") {
    // Derive p and k from max_order = p^(k+1).
    int n = max_order, p = 0;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = n;
    int k = -1;  // exponent of p in n, minus 1
    long long pow = 1;
    while (pow < n) {
      pow *= p;
      ++k;
    }
    if (pow != n)
      throw cdlat::InvalidFamilyParameters(
          "verify up needs --max-order to be a prime power p^(k+1)");
    v = cdlat::up_check(entries, p, k);
  } else {
    cdlat::Theorem t;
    if (theorem == "nil") {
      t = cdlat::Theorem::nil;
    } else if (theorem == "s3") {
      t = cdlat::Theorem::s3;
    } else if (theorem == "lt5") {
      t = cdlat::Theorem::lt5;
    } else {
      throw cdlat::Error("unknown theorem '" + theorem +
                         "' (expected nil, s3, lt5, or up)");
    }
    v = cdlat::verify_theorem(t, entries, max_order);
  }
  print_verdict(v);
  return v.holds ? 0 : 1;
}

int cmd_graph(const std::string& spec, const std::string& out_path) {
  const cdlat::Group g = cdlat::build_group(spec);
  const cdlat::LatticeGraph gr = cdlat::make_lattice_graph(g);
  if (out_path.empty() || out_path == "-") {
    cdlat::write_dot(gr, std::cout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out)
    throw cdlat::Error("cannot open output file " + out_path);
  cdlat::write_dot(gr, out);
  if (!out.good())
    throw cdlat::Error("failed writing output file " + out_path);
  size_t marked = 0;
  for (bool m : gr.cd_member) marked += m;
  std::cout << "wrote " << out_path << ": " << gr.labels.size() << " nodes, "
            << gr.edges.size() << " edges, " << marked << " in CD\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Chermak-Delgado measures, lattices, and condition sweeps for small "
      "finite groups"};
  app.require_subcommand(1);

  std::string spec;
  auto* measure = app.add_subcommand(
      "measure", "CD summary (order, subgroups, m*, |CD|, delta) of one group");
  measure->add_option("spec", spec, "group spec, e.g. \"q 8 x c 3\" or \"s3\"")
      ->required();

  std::vector<std::string> specs;
  auto* table = app.add_subcommand(
      "delta-table", "table of subgroup count, m*, and delta per group");
  table->add_option("specs", specs, "group specs, one argument each")
      ->required();

  int order = 0;
  std::string catalog_path, out_path;
  auto* sweep = app.add_subcommand(
      "sweep-conditions",
      "evaluate the three subgroup conditions on every catalog group of one "
      "order and write a JSON report");
  sweep->add_option("--order", order, "group order to sweep")->required();
  sweep->add_option("--catalog", catalog_path, "catalog file")->required();
  sweep->add_option("--out", out_path, "output JSON file")->required();

  std::string theorem;
  int max_order = 32;
  auto* verify = app.add_subcommand(
      "verify", "check a classification statement against a catalog");
  verify->add_option("theorem", theorem, "one of nil, s3, lt5, up")
      ->required();
  verify->add_option("--catalog", catalog_path, "catalog file")->required();
  verify->add_option("--max-order", max_order,
                     "largest order in scope (for up: the order p^(k+1))");

  std::string graph_out;
  auto* graph = app.add_subcommand(
      "graph", "subgroup-lattice Hasse diagram in DOT, CD members marked");
  graph->add_option("spec", spec, "group spec")->required();
  graph->add_option("--out", graph_out, "output DOT file (default: stdout)");

  try {
    app.parse(argc, argv);
    if (measure->parsed()) return cmd_measure(spec);
    if (table->parsed()) return cmd_delta_table(specs);
    if (sweep->parsed())
      return cmd_sweep_conditions(order, catalog_path, out_path);
    if (verify->parsed())
      return cmd_verify(theorem, catalog_path, max_order);
    if (graph->parsed()) return cmd_graph(spec, graph_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cdlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
