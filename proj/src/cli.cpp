#include "expander_forge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "expander_forge/edge_list.hpp"
#include "expander_forge/lps.hpp"

namespace ef::cli {
namespace {

std::string pq_name(std::int64_t p, std::int64_t q) {
  return "X^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

std::uint64_t first_seed(const JobSpec& spec) { return spec.seeds.empty() ? 0 : spec.seeds.front(); }

// Runs fn against either the named file or the fallback stream.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open output file '" + path + "'");
  fn(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

struct Perturbed {
  std::uint64_t seed = 0;
  Matching matching;
  Graph graph;
  Spectrum spectrum;
  WeylCheck weyl;
};

Perturbed perturb_and_check(const LpsGraph& x, const Spectrum& base, Perturbation dir, std::uint64_t seed,
                            std::optional<Matching> f = std::nullopt) {
  Perturbed r;
  r.seed = seed;
  r.matching = f ? std::move(*f) : perturbing_matching(x, dir, MatchingSeed{seed});
  r.graph = perturb(x, dir, r.matching);
  r.spectrum = eigenvalues(r.graph);
  r.weyl = check_weyl_bound(base, r.spectrum);
  if (!r.weyl.holds) {
    std::ostringstream msg;
    msg << "rank-wise eigenvalue deviation " << r.weyl.max_deviation << " exceeds 1 for " << pq_name(x.p, x.q)
        << (dir == Perturbation::Plus ? " + F" : " - F") << " seed " << seed;
    throw ConsistencyFailure(msg.str());
  }
  return r;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Perturbation parse_perturbation(const std::string& text) {
  if (text == "plus") return Perturbation::Plus;
  if (text == "minus") return Perturbation::Minus;
  throw InvalidInput("perturbation must be 'plus' or 'minus', got '" + text + "'");
}

std::string to_string(Perturbation p) { return p == Perturbation::Plus ? "plus" : "minus"; }

void validate(const JobSpec& spec) {
  if (!is_odd_prime(spec.p)) throw InvalidInput("p = " + std::to_string(spec.p) + " is not an odd prime");
  if (spec.qs.empty()) throw InvalidInput("no q given");
  if (spec.command != Command::Table && spec.qs.size() != 1) throw InvalidInput("exactly one q expected");
  for (auto q : spec.qs) {
    if (!is_odd_prime(q)) throw InvalidInput("q = " + std::to_string(q) + " is not an odd prime");
    if (q == spec.p) throw InvalidInput("p and q must differ");
    if (static_cast<double>(q) <= 2.0 * std::sqrt(static_cast<double>(spec.p)))
      throw InvalidInput("q = " + std::to_string(q) + " is too small for p = " + std::to_string(spec.p) +
                         " (need q > 2 sqrt(p))");
    if (spec.perturb && legendre(spec.p, q) != -1)
      throw InvalidInput(pq_name(spec.p, q) + " is not bipartite (p is a square mod q); perturbations need a bipartite graph");
  }
  if (spec.command == Command::Match && !spec.perturb) throw InvalidInput("match requires --perturb plus|minus");
  if (spec.count && *spec.count == 0) throw InvalidInput("count must be positive");
}

void cmd_build(const JobSpec& spec, std::ostream& out) {
  const auto q = spec.qs.front();
  const auto x = build_lps_graph(spec.p, q);
  if (!spec.output.empty()) with_output(spec.output, out, [&](std::ostream& os) { write_edge_list(os, x.graph); });

  out << pq_name(spec.p, q) << '\n';
  out << "case: " << (x.group == Subgroup::PSL ? "PSL2" : "PGL2") << '(' << q << "), " << spec.p
      << (x.group == Subgroup::PSL ? " is" : " is not") << " a square mod " << q << '\n';
  out << "generators: " << x.generators.size() << '\n';
  out << "vertices: " << x.graph.order() << '\n';
  out << "degree: " << x.degree() << '\n';
  out << "edges: " << x.graph.edge_count() << '\n';
  out << "bipartite: " << yes_no(x.bipartite()) << '\n';
  out << "connected: " << yes_no(is_connected(x.graph)) << '\n';
  if (spec.output.empty()) write_edge_list(out, x.graph);
}

void cmd_spectrum(const JobSpec& spec, std::ostream& out) {
  const auto x = build_lps_graph(spec.p, spec.qs.front());
  Spectrum s = eigenvalues(x.graph);
  if (spec.perturb) s = perturb_and_check(x, s, *spec.perturb, first_seed(spec)).spectrum;
  with_output(spec.output, out, [&](std::ostream& os) { write_spectrum_csv(os, s); });
}

void cmd_match(const JobSpec& spec, std::ostream& out) {
  const auto x = build_lps_graph(spec.p, spec.qs.front());
  const auto f = perturbing_matching(x, *spec.perturb, MatchingSeed{first_seed(spec)});
  with_output(spec.output, out, [&](std::ostream& os) { write_matching(os, f); });
}

void cmd_certify(const JobSpec& spec, std::ostream& out) {
  const auto q = spec.qs.front();
  const auto x = build_lps_graph(spec.p, q);
  const Spectrum base = eigenvalues(x.graph);

  nlohmann::ordered_json j;
  j["p"] = spec.p;
  j["q"] = q;
  j["group"] = x.group == Subgroup::PSL ? "PSL2" : "PGL2";

  const Graph* g = &x.graph;
  const Spectrum* s = &base;
  std::optional<Perturbed> pert;
  if (spec.perturb) {
    pert = perturb_and_check(x, base, *spec.perturb, first_seed(spec));
    g = &pert->graph;
    s = &pert->spectrum;
    j["perturbation"] = to_string(*spec.perturb);
    j["seed"] = pert->seed;
  }

  const auto c = certify(*g, *s);
  if ((c.gap > 1e-9) != c.is_connected)
    throw ConsistencyFailure("spectral gap and BFS connectivity disagree for " + pq_name(spec.p, q));

  j["vertices"] = g->order();
  j["degree"] = c.degree;
  j["lambda0"] = c.lambda0;
  j["lambda1"] = c.lambda1;
  j["gap"] = c.gap;
  j["ramanujan_bound"] = c.ramanujan_bound;
  j["max_nontrivial"] = c.max_nontrivial;
  j["is_ramanujan"] = c.is_ramanujan;
  j["is_connected"] = c.is_connected;
  j["is_bipartite_spectral"] = c.is_bipartite_spectral;

  if (pert) {
    const double floor = gap_lower_bound(spec.p, *spec.perturb);
    j["base_lambda1"] = base[1];
    j["weyl_max_deviation"] = pert->weyl.max_deviation;
    j["weyl_holds"] = pert->weyl.holds;
    j["gap_floor"] = floor;
    j["gap_floor_holds"] = c.gap >= floor - 1e-9;
    j["ramanujan_gap_same_degree"] = ramanujan_gap(c.degree);
    if (c.gap < floor - 1e-9) throw ConsistencyFailure("spectral gap below the guaranteed floor");
  }
  with_output(spec.output, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

namespace {

struct Column {
  std::vector<std::string> header;
  std::vector<std::string> rows;
};

void render_columns(std::ostream& out, const std::string& title, const std::vector<Column>& cols) {
  std::vector<std::size_t> width(cols.size(), 0);
  std::size_t header_lines = 0, body_lines = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& s : cols[c].header) width[c] = std::max(width[c], s.size());
    for (const auto& s : cols[c].rows) width[c] = std::max(width[c], s.size());
    header_lines = std::max(header_lines, cols[c].header.size());
    body_lines = std::max(body_lines, cols[c].rows.size());
  }
  auto line = [&](auto&& cell) {
    std::string text;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string s = cell(c);
      s.insert(0, width[c] - s.size(), ' ');
      text += (c ? " | " : "") + s;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  out << title << '\n';
  for (std::size_t i = 0; i < header_lines; ++i)
    line([&](std::size_t c) { return i < cols[c].header.size() ? cols[c].header[i] : std::string(); });
  for (std::size_t i = 0; i < body_lines; ++i)
    line([&](std::size_t c) { return i < cols[c].rows.size() ? cols[c].rows[i] : std::string(); });
}

constexpr const char* kRowHeader = "   eigval  mult";

std::string row(double value, std::size_t mult) {
  std::ostringstream s;
  s << std::setw(9) << format4(value) << std::setw(6) << mult;
  return s.str();
}

struct TableJob {
  std::int64_t q = 0;
  LpsGraph x;
  Spectrum base;
  std::vector<Perturbed> perturbed;
};

TableJob run_table_job(const JobSpec& spec, std::int64_t q) {
  TableJob job;
  job.q = q;
  job.x = build_lps_graph(spec.p, q);
  job.base = eigenvalues(job.x.graph);
  if (!spec.perturb) return job;

  const auto dir = *spec.perturb;
  if (spec.count) {
    const Graph host = dir == Perturbation::Minus ? job.x.graph : bipartite_complement(job.x.graph);
    auto sample = sample_matchings(host, *spec.count, MatchingSeed{first_seed(spec)});
    if (!sample.complete())
      throw ConsistencyFailure("only " + std::to_string(sample.matchings.size()) + " distinct matchings found");
    for (std::size_t i = 0; i < sample.matchings.size(); ++i)
      job.perturbed.push_back(
          perturb_and_check(job.x, job.base, dir, first_seed(spec) + i, std::move(sample.matchings[i])));
  } else {
    const std::vector<std::uint64_t> seeds = spec.seeds.empty() ? std::vector<std::uint64_t>{0, 1, 2, 3} : spec.seeds;
    for (auto seed : seeds) job.perturbed.push_back(perturb_and_check(job.x, job.base, dir, seed));
  }
  return job;
}

// Top groups of a decreasing spectrum, returned in increasing order.
std::vector<SpectrumGroup> largest_groups(const Spectrum& s, std::size_t count) {
  std::vector<SpectrumGroup> top(s.grouped.begin(), s.grouped.begin() + static_cast<std::ptrdiff_t>(std::min(count, s.grouped.size())));
  std::reverse(top.begin(), top.end());
  return top;
}

}  // namespace

void cmd_table(const JobSpec& spec, std::ostream& out) {
  std::vector<std::future<TableJob>> futures;
  for (auto q : spec.qs) futures.push_back(std::async(std::launch::async, run_table_job, std::cref(spec), q));
  std::vector<TableJob> jobs;
  for (auto& f : futures) jobs.push_back(f.get());

  std::vector<Column> cols;
  std::ostringstream csv;
  const std::string p = std::to_string(spec.p);

  if (!spec.perturb) {
    csv << "q,eigenvalue,multiplicity\n";
    for (const auto& job : jobs) {
      Column c;
      c.header = {"q=" + std::to_string(job.q), kRowHeader};
      for (auto it = job.base.grouped.rbegin(); it != job.base.grouped.rend(); ++it) {
        c.rows.push_back(row(it->value, it->multiplicity));
        csv << job.q << ',' << format4(it->value) << ',' << it->multiplicity << '\n';
      }
      cols.push_back(std::move(c));
    }
    render_columns(out, "spectra of X^{" + p + ",q}", cols);
  } else if (*spec.perturb == Perturbation::Minus) {
    csv << "q,seed,gap\n";
    for (const auto& job : jobs) {
      Column c;
      c.header = {"p=" + p + ",q=" + std::to_string(job.q)};
      for (const auto& r : job.perturbed) {
        const double gap = static_cast<double>(spec.p) - r.spectrum[1];
        c.rows.push_back(format4(gap));
        csv << job.q << ',' << r.seed << ',' << format4(gap) << '\n';
      }
      cols.push_back(std::move(c));
    }
    render_columns(out, "spectral gaps p - lambda_1 of X^{" + p + ",q} - F", cols);
  } else {
    csv << "q,seed,eigenvalue,multiplicity\n";
    for (const auto& job : jobs) {
      for (const auto& r : job.perturbed) {
        Column c;
        c.header = {"q=" + std::to_string(job.q) + " seed=" + std::to_string(r.seed),
                    kRowHeader};
        for (const auto& grp : largest_groups(r.spectrum, 10)) {
          c.rows.push_back(row(grp.value, grp.multiplicity));
          csv << job.q << ',' << r.seed << ',' << format4(grp.value) << ',' << grp.multiplicity << '\n';
        }
        cols.push_back(std::move(c));
      }
    }
    render_columns(out, "largest eigenvalues of X^{" + p + ",q} + F", cols);
  }
  if (!spec.csv.empty()) with_output(spec.csv, out, [&](std::ostream& os) { os << csv.str(); });
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    validate(spec);
    switch (spec.command) {
      case Command::Build: cmd_build(spec, out); break;
      case Command::Spectrum: cmd_spectrum(spec, out); break;
      case Command::Match: cmd_match(spec, out); break;
      case Command::Certify: cmd_certify(spec, out); break;
      case Command::Table: cmd_table(spec, out); break;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ef::cli
